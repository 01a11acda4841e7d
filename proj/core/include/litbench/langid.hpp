#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace litbench {

struct LangScore {
    std::string language;  // "und" when the text has no usable signal
    double confidence = 0.0;
};

// Pluggable language identification; the pipeline only needs score().
class LanguageClassifier {
public:
    virtual ~LanguageClassifier() = default;
    virtual LangScore score(std::string_view text) const = 0;
};

// Bundled default classifier: cosine similarity between the text's
// character-trigram frequency vector and per-language profiles built from
// small embedded seed corpora (en, de, fr, es). Confidence is the winning
// cosine, in [0, 1].
class TrigramClassifier : public LanguageClassifier {
public:
    TrigramClassifier();
    LangScore score(std::string_view text) const override;

    static const TrigramClassifier& bundled();

private:
    struct Profile {
        std::string language;
        std::unordered_map<std::string, double> weights;  // unit L2 norm
    };
    std::vector<Profile> profiles_;
};

// Keep iff the classifier calls the text English with confidence at or above
// the threshold.
bool language_keep(std::string_view text, const LanguageClassifier& classifier,
                   double threshold = 0.5);

}  // namespace litbench
