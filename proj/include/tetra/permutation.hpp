#pragma once

#include <array>
#include <string>
#include <vector>

namespace tetra {

// Permutation of the vertex set {0,1,2,3}, stored as the image list of
// 0,1,2,3. All group actions are from the right: in a product "tau then
// sigma" the map tau is applied first.
struct Permutation {
    std::array<int, 4> img = {0, 1, 2, 3};

    int operator()(int i) const { return img[static_cast<std::size_t>(i)]; }
    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img < b.img; }
};

Permutation perm_identity();
// Applies first first, then second.
Permutation perm_compose(const Permutation& first, const Permutation& second);
Permutation perm_inverse(const Permutation& p);

// The named elements: prime=(123), omega=(13), d=(13)(02), down=(12),
// Down=(03), star=(01)(23).
Permutation perm_prime();
Permutation perm_omega();
Permutation perm_d();
Permutation perm_down();
Permutation perm_Down();
Permutation perm_star();

const std::vector<Permutation>& all_permutations();

// Parses an image list "abcd" (images of 0,1,2,3 in order); rejects
// repeated digits or digits outside 0..3.
Permutation perm_parse(const std::string& digits);
std::string perm_str(const Permutation& p);

}  // namespace tetra
