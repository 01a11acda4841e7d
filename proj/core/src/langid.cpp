#include "litbench/langid.hpp"

#include <cmath>

#include "litbench/unicode.hpp"

namespace litbench {

namespace {

// Seed corpora for the bundled profiles: a few everyday paragraphs per
// language, enough for trigram statistics to separate the four clearly.
constexpr std::string_view kSeedEn =
    "The morning train leaves the station a few minutes after seven, and the "
    "platform is already busy with people carrying coffee and newspapers. "
    "From the window you can watch the river bend around the old mill, where "
    "a narrow bridge crosses toward the market square. Most shops open "
    "slowly, one shutter at a time, while delivery vans block half of the "
    "street and nobody seems to mind. In the afternoon the light turns warm "
    "and the benches along the water fill with students reading or simply "
    "watching the boats. When the weather changes, the wind pushes low "
    "clouds over the hills and the first drops of rain send everyone under "
    "the arcades. It is a small town, but it has a long memory, and the "
    "people who live here like to tell its stories to anyone who will "
    "listen. Dinner is served late, the bread is still warm, and the "
    "conversation continues until the lamps come on.";

constexpr std::string_view kSeedDe =
    "Der Morgen beginnt mit einem leichten Regen, der leise auf die Daecher "
    "der kleinen Stadt faellt. Auf dem Markt bauen die Haendler ihre "
    "Staende auf und stapeln Obst und Gemuese in bunten Kisten. Die alte "
    "Strassenbahn faehrt quietschend um die Ecke, waehrend die Kinder mit "
    "ihren Schulranzen zur Schule laufen. Mittags riecht es in den Gassen "
    "nach frischem Brot, und vor der Baeckerei bildet sich eine geduldige "
    "Schlange. Am Nachmittag sitzen die Nachbarn im Hof zusammen, trinken "
    "Kaffee und sprechen ueber das Wetter, die Arbeit und die naechste "
    "Reise. Wenn die Sonne untergeht, werden die Lichter am Fluss "
    "angezuendet, und die Bruecke spiegelt sich ruhig im dunklen Wasser. "
    "Spaeter liest jemand noch eine Zeitung, ein Hund bellt in der Ferne, "
    "und die Stadt wird langsam still.";

constexpr std::string_view kSeedFr =
    "Le matin commence doucement dans les rues de la petite ville, quand "
    "les volets s'ouvrent un par un et que l'odeur du pain chaud sort des "
    "boulangeries. Sur la place du marche, les vendeurs installent leurs "
    "etals et rangent les fruits dans des caisses de bois. Les enfants "
    "traversent le pont en courant pour arriver a l'ecole avant la cloche. "
    "A midi, les terrasses se remplissent et l'on entend partout des "
    "conversations sur le temps, les vacances et la prochaine fete du "
    "village. L'apres-midi, la lumiere devient plus douce et la riviere "
    "brille entre les arbres. Quand le soir arrive, les lampes s'allument "
    "le long du quai et les habitants se promenent lentement, heureux de "
    "retrouver leurs voisins. La nuit, la ville respire calmement et les "
    "etoiles se refletent dans l'eau sombre.";

constexpr std::string_view kSeedEs =
    "La manana empieza despacio en el pueblo, cuando las ventanas se abren "
    "una a una y el olor del pan recien hecho llena la calle principal. En "
    "la plaza del mercado los vendedores colocan la fruta en cajas de "
    "madera y saludan a los primeros clientes. Los ninos cruzan el puente "
    "corriendo para llegar a la escuela antes de que suene la campana. Al "
    "mediodia las terrazas se llenan de gente que habla del tiempo, del "
    "trabajo y de la proxima fiesta del barrio. Por la tarde la luz se "
    "vuelve dorada y el rio brilla entre los arboles de la orilla. Cuando "
    "llega la noche, se encienden las lamparas junto al agua y los vecinos "
    "pasean sin prisa, contentos de encontrarse otra vez. Mas tarde el "
    "pueblo descansa en silencio y las estrellas se reflejan en el agua "
    "oscura.";

std::unordered_map<std::string, double> trigram_vector(std::string_view text) {
    const std::u32string cps =
        uni::decode_utf8(uni::collapse_ws(uni::to_lower(text)));
    std::unordered_map<std::string, double> counts;
    if (cps.size() < 3) return counts;
    for (std::size_t i = 0; i + 3 <= cps.size(); ++i) {
        counts[uni::encode_utf8(std::u32string_view(cps).substr(i, 3))] += 1.0;
    }
    double norm = 0.0;
    for (const auto& [gram, n] : counts) norm += n * n;
    norm = std::sqrt(norm);
    for (auto& [gram, n] : counts) n /= norm;
    return counts;
}

}  // namespace

TrigramClassifier::TrigramClassifier() {
    profiles_.push_back({"en", trigram_vector(kSeedEn)});
    profiles_.push_back({"de", trigram_vector(kSeedDe)});
    profiles_.push_back({"fr", trigram_vector(kSeedFr)});
    profiles_.push_back({"es", trigram_vector(kSeedEs)});
}

LangScore TrigramClassifier::score(std::string_view text) const {
    const std::unordered_map<std::string, double> v = trigram_vector(text);
    if (v.empty()) return {"und", 0.0};
    LangScore best{"und", 0.0};
    for (const Profile& p : profiles_) {
        double cosine = 0.0;
        for (const auto& [gram, weight] : v) {
            const auto it = p.weights.find(gram);
            if (it != p.weights.end()) cosine += weight * it->second;
        }
        if (cosine > best.confidence) best = {p.language, cosine};
    }
    return best;
}

const TrigramClassifier& TrigramClassifier::bundled() {
    static const TrigramClassifier instance;
    return instance;
}

bool language_keep(std::string_view text, const LanguageClassifier& classifier,
                   double threshold) {
    const LangScore s = classifier.score(text);
    return s.language == "en" && s.confidence >= threshold;
}

}  // namespace litbench
