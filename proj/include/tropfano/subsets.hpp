#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace tropfano {

using Subset = std::vector<int>;  // strictly increasing indices

// All k-subsets of {0,...,n-1} in lexicographic order.
inline std::vector<Subset> k_subsets(int n, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    Subset cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

// lexicographic rank of a k-subset among k-subsets of {0,...,n-1}
inline long subset_rank(const Subset& s, int n) {
    long rank = 0;
    int k = int(s.size());
    int prev = -1;
    auto binom = [](int a, int b) -> long {
        if (b < 0 || b > a) return 0;
        long r = 1;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < s[i]; ++v) rank += binom(n - 1 - v, k - 1 - i);
        prev = s[i];
    }
    return rank;
}

inline Subset subset_insert(Subset s, int e) {
    s.insert(std::upper_bound(s.begin(), s.end(), e), e);
    return s;
}

inline Subset subset_erase(Subset s, int e) {
    s.erase(std::find(s.begin(), s.end(), e));
    return s;
}

inline bool subset_contains(const Subset& s, int e) {
    return std::binary_search(s.begin(), s.end(), e);
}

// "013"-style key used in JSON Pluecker maps; indices >= 10 are comma separated
inline std::string subset_key(const Subset& s) {
    bool wide = !s.empty() && s.back() >= 10;
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (wide && i) out += ",";
        out += std::to_string(s[i]);
    }
    return out;
}

}  // namespace tropfano
