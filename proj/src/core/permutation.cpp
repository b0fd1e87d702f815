#include "core/permutation.hpp"

#include <stdexcept>

namespace altdes {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
        if (v < 1 || v > static_cast<int>(word_.size()) || seen[v - 1])
            throw std::domain_error("word is not a permutation of 1..n");
        seen[v - 1] = true;
    }
}

Permutation Permutation::complement() const {
    std::vector<int> out(word_.size());
    const int n = size();
    for (int i = 0; i < n; ++i) out[i] = n + 1 - word_[i];
    return Permutation(std::move(out));
}

StatProfile statistics(const Permutation& p) {
    StatProfile st;
    const auto& w = p.word();
    const int n = p.size();
    for (int i = 1; i < n; ++i) {
        const bool desc = w[i - 1] > w[i];
        if (desc) {
            st.descent_set.push_back(i);
            st.maj += i;
        }
        if ((i % 2 == 1) ? desc : !desc) {
            st.alt_descent_set.push_back(i);
            st.altmaj += i;
        }
    }
    for (int i = 2; i < n; ++i) {
        if (w[i - 2] < w[i - 1] && w[i - 1] > w[i]) st.peaks.push_back(i);
        if (w[i - 2] > w[i - 1] && w[i - 1] < w[i]) st.valleys.push_back(i);
    }
    st.des = static_cast<int>(st.descent_set.size());
    st.altdes = static_cast<int>(st.alt_descent_set.size());
    return st;
}

std::vector<std::vector<int>> alternating_runs(const Permutation& p) {
    std::vector<std::vector<int>> runs;
    const auto& w = p.word();
    const int n = p.size();
    std::vector<int> cur;
    for (int i = 1; i <= n; ++i) {
        cur.push_back(w[i - 1]);
        bool split = false;
        if (i < n) {
            const bool desc = w[i - 1] > w[i];
            split = (i % 2 == 1) ? desc : !desc;
        }
        if (split) {
            runs.push_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) runs.push_back(cur);
    return runs;
}

Composition descent_composition(const Permutation& p) {
    return Composition::from_subset(statistics(p).descent_set, p.size());
}

Composition alt_descent_composition(const Permutation& p) {
    return Composition::from_subset(statistics(p).alt_descent_set, p.size());
}

bool is_alternating(const Permutation& p) {
    const auto& w = p.word();
    for (int i = 1; i < p.size(); ++i) {
        const bool desc = w[i - 1] > w[i];
        if ((i % 2 == 1) ? !desc : desc) return false;
    }
    return true;
}

bool is_reverse_alternating(const Permutation& p) {
    const auto& w = p.word();
    for (int i = 1; i < p.size(); ++i) {
        const bool desc = w[i - 1] > w[i];
        if ((i % 2 == 1) ? desc : !desc) return false;
    }
    return true;
}

}  // namespace altdes
