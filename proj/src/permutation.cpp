#include "tetra/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace tetra {

Permutation perm_identity() { return {}; }

Permutation perm_compose(const Permutation& first, const Permutation& second) {
    Permutation r;
    for (int i = 0; i < 4; ++i) r.img[static_cast<std::size_t>(i)] = second(first(i));
    return r;
}

Permutation perm_inverse(const Permutation& p) {
    Permutation r;
    for (int i = 0; i < 4; ++i) r.img[static_cast<std::size_t>(p(i))] = i;
    return r;
}

Permutation perm_prime() { return {{0, 2, 3, 1}}; }
Permutation perm_omega() { return {{0, 3, 2, 1}}; }
Permutation perm_d() { return {{2, 3, 0, 1}}; }
Permutation perm_down() { return {{0, 2, 1, 3}}; }
Permutation perm_Down() { return {{3, 1, 2, 0}}; }
Permutation perm_star() { return {{1, 0, 3, 2}}; }

const std::vector<Permutation>& all_permutations() {
    static const std::vector<Permutation> all = [] {
        std::vector<Permutation> v;
        std::array<int, 4> img = {0, 1, 2, 3};
        do {
            v.push_back({img});
        } while (std::next_permutation(img.begin(), img.end()));
        return v;
    }();
    return all;
}

Permutation perm_parse(const std::string& digits) {
    if (digits.size() != 4) throw std::invalid_argument("permutation needs exactly 4 digits");
    Permutation p;
    std::array<bool, 4> seen = {false, false, false, false};
    for (std::size_t k = 0; k < 4; ++k) {
        char ch = digits[k];
        if (ch < '0' || ch > '3') throw std::invalid_argument("permutation digit outside 0..3");
        int v = ch - '0';
        if (seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation with repeated digit");
        seen[static_cast<std::size_t>(v)] = true;
        p.img[k] = v;
    }
    return p;
}

std::string perm_str(const Permutation& p) {
    std::string s;
    for (int i = 0; i < 4; ++i) s += static_cast<char>('0' + p(i));
    return s;
}

}  // namespace tetra
