#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "subanta/phoneme.hpp"

namespace subanta::testing {

inline std::string data_dir() {
#ifdef SUBANTA_DATA_DIR
    return SUBANTA_DATA_DIR;
#else
    return "data";
#endif
}

inline std::string data_file(const std::string& name) { return data_dir() + "/" + name; }

// Independent retroflexion oracle: a literal transcription of the rule
// statement, quadratic over all (trigger, n) pairs. Deliberately not
// the single-pass algorithm used by the library.
inline PhonemeString natva_oracle(const PhonemeString& w) {
    std::vector<Phoneme> out(w.begin(), w.end());
    const Phoneme n = Phoneme::from_symbol("n");
    const Phoneme nn = Phoneme::from_symbol("ṇ");
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!(w[i] == n)) continue;
        if (i + 1 >= w.size() || !w[i + 1].is_vowel()) continue;
        for (std::size_t j = 0; j < i; ++j) {
            if (!is_natva_trigger(w[j])) continue;
            bool clear = true;
            for (std::size_t k = j + 1; k < i && clear; ++k)
                clear = is_natva_intervener(w[k]);
            if (clear) {
                out[i] = nn;
                break;
            }
        }
    }
    return PhonemeString(std::move(out));
}

// Random inventory-valid word; all randomness is seeded by the caller.
inline PhonemeString random_word(std::mt19937& rng, std::size_t min_len = 1,
                                 std::size_t max_len = 12) {
    auto inv = inventory();
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, inv.size() - 1);
    PhonemeString out;
    std::size_t len = len_dist(rng);
    for (std::size_t i = 0; i < len; ++i) out.push_back(inv[pick(rng)]);
    return out;
}

// Random word biased toward retroflexion-relevant material so the natva
// tests hit interesting configurations often.
inline PhonemeString random_natva_word(std::mt19937& rng) {
    static const std::vector<std::string> pool = {
        "r", "ṛ", "ṝ", "ṣ", "n", "a", "ā", "i", "u", "e",
        "m", "p", "k", "y", "v", "h", "ṃ", "c", "t", "ś", "s", "ḍ",
    };
    std::uniform_int_distribution<std::size_t> len_dist(1, 14);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    PhonemeString out;
    std::size_t len = len_dist(rng);
    for (std::size_t i = 0; i < len; ++i)
        out.push_back(Phoneme::from_symbol(pool[pick(rng)]));
    return out;
}

// Reads a gold paradigm file: '#' lines are commentary, the rest are
// forms in expected order.
inline std::vector<std::string> read_gold(const std::string& path) {
    std::ifstream in(path);
    std::vector<std::string> forms;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        forms.push_back(line);
    }
    return forms;
}

}  // namespace subanta::testing
