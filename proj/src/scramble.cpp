#include "lpiso/scramble.hpp"

#include <numeric>
#include <random>

namespace lpiso {

Scramble Scramble::identity() { return Scramble{}; }

bool Scramble::is_identity() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != i || signs[i] != 1) return false;
    for (std::size_t j = 0; j < piece_perm.size(); ++j)
        if (piece_perm[j] != j || piece_signs[j] != 1) return false;
    return true;
}

void Scramble::validate() const {
    if (signs.size() != perm.size()) raise(ErrorCode::BadInput, "scramble sign list size mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= perm.size() || seen[perm[i]])
            raise(ErrorCode::BadInput, "scramble atom map is not a permutation");
        seen[perm[i]] = true;
        if (signs[i] != 1 && signs[i] != -1) raise(ErrorCode::BadInput, "scramble signs must be +-1");
    }
    std::size_t pieces = static_cast<std::size_t>(1) << piece_level;
    if (!piece_perm.empty() || piece_level > 0) {
        if (piece_perm.size() != pieces || piece_signs.size() != pieces)
            raise(ErrorCode::BadInput, "piece permutation must cover all 2^level pieces");
        std::vector<bool> pseen(pieces, false);
        for (std::size_t j = 0; j < pieces; ++j) {
            if (piece_perm[j] >= pieces || pseen[piece_perm[j]])
                raise(ErrorCode::BadInput, "piece map is not a permutation");
            pseen[piece_perm[j]] = true;
            if (piece_signs[j] != 1 && piece_signs[j] != -1)
                raise(ErrorCode::BadInput, "piece signs must be +-1");
        }
    }
}

std::uint32_t Scramble::atom_image(std::uint32_t i) const {
    return i < perm.size() ? perm[i] : i;
}

int Scramble::atom_sign(std::uint32_t i) const { return i < signs.size() ? signs[i] : 1; }

LpVector Scramble::apply(const LpVector& v) const {
    SeqVector atoms;
    for (const auto& [i, c] : v.atomic().coeffs())
        atoms = atoms.with(atom_image(i), atom_sign(i) * c);

    StepFunction cont = v.continuous();
    if (!piece_perm.empty() && !cont.is_zero()) {
        std::int64_t level = std::max(piece_level, cont.breakpoint_level());
        auto cells = cont.values_on_grid(level);
        std::vector<Rational> moved(cells.size(), Rational(0));
        std::size_t sub = static_cast<std::size_t>(1) << (level - piece_level);
        for (std::size_t j = 0; j < cells.size(); ++j) {
            std::size_t coarse = j / sub;
            std::size_t target = static_cast<std::size_t>(piece_perm[coarse]) * sub + (j % sub);
            moved[target] = piece_signs[coarse] * cells[j];
        }
        cont = StepFunction::from_grid(level, moved);
    }
    return LpVector(v.tag(), v.exponent(), atoms, cont, v.dimension());
}

Scramble Scramble::inverse() const {
    Scramble inv;
    inv.perm.resize(perm.size());
    inv.signs.resize(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        inv.perm[perm[i]] = static_cast<std::uint32_t>(i);
        inv.signs[perm[i]] = signs[i];
    }
    inv.piece_level = piece_level;
    inv.piece_perm.resize(piece_perm.size());
    inv.piece_signs.resize(piece_perm.size());
    for (std::size_t j = 0; j < piece_perm.size(); ++j) {
        inv.piece_perm[piece_perm[j]] = static_cast<std::uint32_t>(j);
        inv.piece_signs[piece_perm[j]] = piece_signs[j];
    }
    return inv;
}

namespace {

// Raw-output shuffling keeps seeded scrambles identical across platforms.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

} // namespace

Scramble Scramble::random(std::uint64_t seed, std::uint32_t atom_count, std::int64_t level) {
    std::mt19937_64 rng(seed);
    Scramble s;
    s.perm.resize(atom_count);
    std::iota(s.perm.begin(), s.perm.end(), 0u);
    for (std::size_t i = atom_count; i > 1; --i)
        std::swap(s.perm[i - 1], s.perm[bounded(rng, i)]);
    s.signs.resize(atom_count);
    for (auto& sg : s.signs) sg = bounded(rng, 2) ? -1 : 1;

    s.piece_level = level;
    std::size_t pieces = static_cast<std::size_t>(1) << level;
    s.piece_perm.resize(pieces);
    std::iota(s.piece_perm.begin(), s.piece_perm.end(), 0u);
    for (std::size_t i = pieces; i > 1; --i)
        std::swap(s.piece_perm[i - 1], s.piece_perm[bounded(rng, i)]);
    s.piece_signs.resize(pieces);
    for (auto& sg : s.piece_signs) sg = bounded(rng, 2) ? -1 : 1;
    s.validate();
    return s;
}

} // namespace lpiso
