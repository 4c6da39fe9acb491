#pragma once

#include <cstdint>
#include <vector>

#include "lpiso/lp_vector.hpp"

namespace lpiso {

// A hidden isometry used to scramble a standard presentation: a signed
// permutation of the atomic coordinates composed with a signed
// measure-preserving rearrangement of the 2^level equal dyadic pieces of
// [0,1].  Both components are isometries of every Lp, so the composition is
// one too; the description doubles as the test harness's ground truth.
struct Scramble {
    // Images of coordinates 0..perm.size()-1; identity with sign +1 beyond.
    std::vector<std::uint32_t> perm;
    std::vector<int> signs;

    std::int64_t piece_level = 0;
    std::vector<std::uint32_t> piece_perm;   // size 2^piece_level
    std::vector<int> piece_signs;

    static Scramble identity();
    bool is_identity() const;

    void validate() const;

    std::uint32_t atom_image(std::uint32_t i) const;
    int atom_sign(std::uint32_t i) const;

    LpVector apply(const LpVector& v) const;

    Scramble inverse() const;

    // Deterministic scramble from a seed; atomic part touches coordinates
    // < atom_count, pieces rearranged at the given level.
    static Scramble random(std::uint64_t seed, std::uint32_t atom_count, std::int64_t level);
};

} // namespace lpiso
