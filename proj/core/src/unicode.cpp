#include "litbench/unicode.hpp"

#include <unicode/uchar.h>
#include <unicode/unorm2.h>
#include <unicode/ustring.h>

#include <algorithm>
#include <cstdint>

#include "litbench/errors.hpp"

namespace litbench::uni {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one code point starting at s[i]. Returns the code point and advances
// i past it; on malformed input consumes a single byte and returns U+FFFD.
char32_t next_cp(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return kReplacement;
    }
    if (i + len > s.size()) {
        ++i;
        return kReplacement;
    }
    for (int k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) {
            ++i;
            return kReplacement;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong forms, surrogates, and out-of-range values.
    const bool overlong = (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                          (len == 4 && cp < 0x10000);
    if (overlong || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        ++i;
        return kReplacement;
    }
    i += len;
    return cp;
}

}  // namespace

std::u32string decode_utf8(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) out.push_back(next_cp(s, i));
    return out;
}

std::string encode_utf8(std::u32string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char32_t cp : s) {
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = kReplacement;
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

bool valid_utf8(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        const std::size_t before = i;
        if (next_cp(s, i) == kReplacement) {
            // U+FFFD is also a legitimate character; re-check the raw bytes.
            if (i - before != 3 || s.substr(before, 3) != "\xEF\xBF\xBD") return false;
        }
    }
    return true;
}

std::string nfc(std::string_view s) {
    // ASCII is already composed; skip the ICU round trip for the common case.
    if (std::all_of(s.begin(), s.end(),
                    [](char c) { return static_cast<unsigned char>(c) < 0x80; })) {
        return std::string(s);
    }

    UErrorCode ec = U_ZERO_ERROR;
    int32_t len16 = 0;
    u_strFromUTF8(nullptr, 0, &len16, s.data(), static_cast<int32_t>(s.size()), &ec);
    if (ec != U_BUFFER_OVERFLOW_ERROR && U_FAILURE(ec)) {
        throw Error("nfc: invalid utf-8 input");
    }
    ec = U_ZERO_ERROR;
    std::u16string u16(static_cast<std::size_t>(len16), u'\0');
    u_strFromUTF8(u16.data(), len16, nullptr, s.data(), static_cast<int32_t>(s.size()), &ec);
    if (U_FAILURE(ec)) throw Error("nfc: invalid utf-8 input");

    const UNormalizer2* n2 = unorm2_getNFCInstance(&ec);
    if (U_FAILURE(ec)) throw Error("nfc: normalizer unavailable");

    int32_t norm_len = unorm2_normalize(n2, u16.data(), len16, nullptr, 0, &ec);
    if (ec != U_BUFFER_OVERFLOW_ERROR && U_FAILURE(ec)) {
        throw Error("nfc: normalization failed");
    }
    ec = U_ZERO_ERROR;
    std::u16string norm(static_cast<std::size_t>(norm_len), u'\0');
    unorm2_normalize(n2, u16.data(), len16, norm.data(), norm_len, &ec);
    if (U_FAILURE(ec)) throw Error("nfc: normalization failed");

    int32_t len8 = 0;
    u_strToUTF8(nullptr, 0, &len8, norm.data(), norm_len, &ec);
    if (ec != U_BUFFER_OVERFLOW_ERROR && U_FAILURE(ec)) {
        throw Error("nfc: utf-8 encoding failed");
    }
    ec = U_ZERO_ERROR;
    std::string out(static_cast<std::size_t>(len8), '\0');
    u_strToUTF8(out.data(), len8, nullptr, norm.data(), norm_len, &ec);
    if (U_FAILURE(ec)) throw Error("nfc: utf-8 encoding failed");
    return out;
}

bool is_space(char32_t c) {
    return u_isUWhiteSpace(static_cast<UChar32>(c)) != 0;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    const std::u32string cps = decode_utf8(s);
    std::u32string cur;
    for (char32_t c : cps) {
        if (is_space(c)) {
            if (!cur.empty()) {
                out.push_back(encode_utf8(cur));
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(encode_utf8(cur));
    return out;
}

std::string collapse_ws(std::string_view s) {
    const std::u32string cps = decode_utf8(s);
    std::u32string out;
    bool pending_space = false;
    for (char32_t c : cps) {
        if (is_space(c)) {
            if (!out.empty()) pending_space = true;
        } else {
            if (pending_space) out.push_back(U' ');
            pending_space = false;
            out.push_back(c);
        }
    }
    return encode_utf8(out);
}

std::string to_lower(std::string_view s) {
    std::u32string cps = decode_utf8(s);
    for (char32_t& c : cps) {
        c = static_cast<char32_t>(u_tolower(static_cast<UChar32>(c)));
    }
    return encode_utf8(cps);
}

}  // namespace litbench::uni
