// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// UTF-8 transcoding, canonical normalization (NFC) and full lowercase
// mapping over the generated tables in unicode_tables.hpp. Hangul
// syllables are composed/decomposed arithmetically.

#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>

#include "fada/errors.hpp"
#include "fada/unicode_tables.hpp"

namespace fada::unicode {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// --- UTF-8 ---------------------------------------------------------------

inline void append_utf8(std::string& out, char32_t cp) {
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

inline std::string to_utf8(const std::u32string& s) {
    std::string out;
    out.reserve(s.size());
    for (char32_t cp : s) append_utf8(out, cp);
    return out;
}

// Strict decoder: malformed input raises InvalidUtf8.
inline std::u32string to_utf32(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    const auto n = s.size();
    auto cont = [&](std::size_t k) {
        return k < n && (static_cast<unsigned char>(s[k]) & 0xC0) == 0x80;
    };
    while (i < n) {
        const unsigned char b0 = static_cast<unsigned char>(s[i]);
        char32_t cp;
        std::size_t len;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            if (!cont(i + 1)) throw InvalidUtf8(i);
            cp = ((b0 & 0x1Fu) << 6) | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
            if (cp < 0x80) throw InvalidUtf8(i);
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            if (!cont(i + 1) || !cont(i + 2)) throw InvalidUtf8(i);
            cp = ((b0 & 0x0Fu) << 12) | ((static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6) |
                 (static_cast<unsigned char>(s[i + 2]) & 0x3Fu);
            if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) throw InvalidUtf8(i);
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            if (!cont(i + 1) || !cont(i + 2) || !cont(i + 3)) throw InvalidUtf8(i);
            cp = ((b0 & 0x07u) << 18) | ((static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 12) |
                 ((static_cast<unsigned char>(s[i + 2]) & 0x3Fu) << 6) |
                 (static_cast<unsigned char>(s[i + 3]) & 0x3Fu);
            if (cp < 0x10000 || cp > 0x10FFFF) throw InvalidUtf8(i);
            len = 4;
        } else {
            throw InvalidUtf8(i);
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

// --- table lookups -------------------------------------------------------

namespace detail {

template <typename Entry, std::size_t N>
const Entry* find_entry(const Entry (&table)[N], char32_t cp) {
    auto it = std::lower_bound(std::begin(table), std::end(table), cp,
                               [](const Entry& e, char32_t c) { return e.cp < c; });
    if (it != std::end(table) && it->cp == cp) return &*it;
    return nullptr;
}

template <std::size_t N>
bool in_ranges(const unicode_tables::Range (&table)[N], char32_t cp) {
    auto it = std::upper_bound(std::begin(table), std::end(table), cp,
                               [](char32_t c, const unicode_tables::Range& r) { return c < r.first; });
    return it != std::begin(table) && cp <= std::prev(it)->last;
}

// Hangul syllable arithmetic (UAX #15).
inline constexpr char32_t kHangulSBase = 0xAC00, kHangulLBase = 0x1100,
                          kHangulVBase = 0x1161, kHangulTBase = 0x11A7;
inline constexpr int kHangulLCount = 19, kHangulVCount = 21, kHangulTCount = 28;
inline constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
inline constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

inline bool hangul_decompose(char32_t cp, std::u32string& out) {
    const int idx = static_cast<int>(cp) - static_cast<int>(kHangulSBase);
    if (idx < 0 || idx >= kHangulSCount) return false;
    out.push_back(kHangulLBase + idx / kHangulNCount);
    out.push_back(kHangulVBase + (idx % kHangulNCount) / kHangulTCount);
    if (idx % kHangulTCount != 0) out.push_back(kHangulTBase + idx % kHangulTCount);
    return true;
}

inline char32_t hangul_compose(char32_t a, char32_t b) {
    const int l = static_cast<int>(a) - static_cast<int>(kHangulLBase);
    if (l >= 0 && l < kHangulLCount) {
        const int v = static_cast<int>(b) - static_cast<int>(kHangulVBase);
        if (v >= 0 && v < kHangulVCount)
            return kHangulSBase + (l * kHangulVCount + v) * kHangulTCount;
    }
    const int s = static_cast<int>(a) - static_cast<int>(kHangulSBase);
    if (s >= 0 && s < kHangulSCount && s % kHangulTCount == 0) {
        const int t = static_cast<int>(b) - static_cast<int>(kHangulTBase);
        if (t > 0 && t < kHangulTCount) return a + t;
    }
    return 0;
}

}  // namespace detail

inline int combining_class(char32_t cp) {
    const auto* e = detail::find_entry(unicode_tables::kCcc, cp);
    return e ? e->ccc : 0;
}

inline bool is_letter(char32_t cp) {
    return detail::in_ranges(unicode_tables::kLetterRanges, cp);
}

inline bool is_case_ignorable(char32_t cp) {
    return detail::in_ranges(unicode_tables::kCaseIgnorableRanges, cp);
}

// --- normalization -------------------------------------------------------

inline std::u32string nfd(const std::u32string& s) {
    std::u32string out;
    out.reserve(s.size());
    for (char32_t cp : s) {
        if (detail::hangul_decompose(cp, out)) continue;
        if (const auto* e = detail::find_entry(unicode_tables::kDecomp, cp)) {
            for (std::uint8_t k = 0; k < e->length; ++k)
                out.push_back(unicode_tables::kDecompPool[e->offset + k]);
        } else {
            out.push_back(cp);
        }
    }
    // Canonical ordering: stable exchange of adjacent marks with ccc(a) > ccc(b) > 0.
    for (std::size_t i = 1; i < out.size(); ++i) {
        const int cc = combining_class(out[i]);
        if (cc == 0) continue;
        std::size_t j = i;
        while (j > 0) {
            const int prev = combining_class(out[j - 1]);
            if (prev <= cc) break;
            std::swap(out[j - 1], out[j]);
            --j;
        }
    }
    return out;
}

inline char32_t compose_pair(char32_t a, char32_t b) {
    if (char32_t h = detail::hangul_compose(a, b)) return h;
    auto it = std::lower_bound(std::begin(unicode_tables::kCompose), std::end(unicode_tables::kCompose),
                               std::pair<char32_t, char32_t>{a, b},
                               [](const unicode_tables::ComposeEntry& e, const std::pair<char32_t, char32_t>& p) {
                                   return e.first != p.first ? e.first < p.first : e.second < p.second;
                               });
    if (it != std::end(unicode_tables::kCompose) && it->first == a && it->second == b)
        return it->composite;
    return 0;
}

inline std::u32string nfc(const std::u32string& s) {
    std::u32string d = nfd(s);
    if (d.empty()) return d;
    std::u32string out;
    out.reserve(d.size());
    std::ptrdiff_t last_starter = -1;
    int last_cc = 0;
    for (char32_t cp : d) {
        const int cc = combining_class(cp);
        if (last_starter >= 0) {
            const bool blocked = (last_cc != 0 && last_cc >= cc) ||
                                 (cc == 0 && static_cast<std::size_t>(last_starter) + 1 != out.size());
            if (!blocked) {
                if (char32_t comp = compose_pair(out[static_cast<std::size_t>(last_starter)], cp)) {
                    out[static_cast<std::size_t>(last_starter)] = comp;
                    // last_cc keeps the class of the last uncomposed mark.
                    continue;
                }
            }
        }
        if (cc == 0) {
            last_starter = static_cast<std::ptrdiff_t>(out.size());
            last_cc = 0;
        } else {
            last_cc = cc;
        }
        out.push_back(cp);
    }
    return out;
}

// --- case mapping --------------------------------------------------------

inline constexpr char32_t kCapitalSigma = 0x03A3;
inline constexpr char32_t kSmallSigma = 0x03C3;
inline constexpr char32_t kFinalSigma = 0x03C2;

namespace detail {

// Final_Sigma context: preceded by a cased letter (skipping case-ignorables)
// and not followed by one. Letter category approximates "cased" here.
inline bool final_sigma_context(const std::u32string& s, std::size_t i) {
    bool before = false;
    for (std::size_t j = i; j > 0; --j) {
        const char32_t c = s[j - 1];
        if (is_case_ignorable(c)) continue;
        before = is_letter(c);
        break;
    }
    if (!before) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
        const char32_t c = s[j];
        if (is_case_ignorable(c)) continue;
        return !is_letter(c);
    }
    return true;
}

}  // namespace detail

inline std::u32string to_lower(const std::u32string& s) {
    std::u32string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char32_t cp = s[i];
        if (cp == kCapitalSigma) {
            out.push_back(detail::final_sigma_context(s, i) ? kFinalSigma : kSmallSigma);
            continue;
        }
        if (const auto* e = detail::find_entry(unicode_tables::kLower, cp)) {
            for (std::uint8_t k = 0; k < e->length; ++k)
                out.push_back(unicode_tables::kLowerPool[e->offset + k]);
        } else {
            out.push_back(cp);
        }
    }
    return out;
}

}  // namespace fada::unicode
