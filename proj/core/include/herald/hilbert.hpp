// hilbert.hpp — labeled tensor-product basis for two three-level atoms and
// two polarized cavity modes with a Fock cutoff.

#pragma once

#include <compare>
#include <string>

namespace herald {

// Levels of the lambda system. The order is fixed (GroundL < GroundR < Excited)
// so basis indexing is deterministic.
enum class AtomLevel : int { GroundL = 0, GroundR = 1, Excited = 2 };

inline constexpr int kAtomLevelCount = 3;

enum class Atom : int { A = 0, B = 1 };

enum class Polarization : int { Left = 0, Right = 1 };

char to_char(AtomLevel level);
char to_char(Polarization pol);

// Occupation of the two circularly polarized cavity modes.
struct PhotonConfig {
    int n_left{0};
    int n_right{0};

    friend bool operator==(const PhotonConfig&, const PhotonConfig&) = default;
};

// One product basis ket |atom_a, atom_b; n_left, n_right>.
struct BasisState {
    AtomLevel atom_a{AtomLevel::GroundL};
    AtomLevel atom_b{AtomLevel::GroundL};
    PhotonConfig photons{};

    friend bool operator==(const BasisState&, const BasisState&) = default;
};

// Compact label such as "|L,L;1,0>".
std::string to_string(const BasisState& state);

// Composite space of dimension 9*(cutoff+1)^2. Index layout: atom_a varies
// slowest, then atom_b, then n_left, with n_right fastest:
//   index = ((a*3 + b)*(cutoff+1) + n_left)*(cutoff+1) + n_right
// The layout is part of the contract; serialized states are comparable
// across runs.
class HilbertSpace {
public:
    // cutoff >= 1: the protocol stores at least one photon per mode.
    explicit HilbertSpace(int fock_cutoff);

    int cutoff() const noexcept { return cutoff_; }
    int dim() const noexcept { return dim_; }

    bool contains(const BasisState& state) const noexcept;

    // Bijective both ways; index_of(label_of(i)) == i for every flat index.
    int index_of(const BasisState& state) const;
    BasisState label_of(int index) const;

    friend bool operator==(const HilbertSpace& a, const HilbertSpace& b) {
        return a.cutoff_ == b.cutoff_;
    }

private:
    int cutoff_;
    int dim_;
};

// Convenience frequently-used kets of the protocol.
BasisState initial_ket();                       // |L,L;1,0>
BasisState ground_ket();                        // |L,L;0,0>
BasisState entangled_component_ket(Atom which); // |R,L;0,0> or |L,R;0,0>

}  // namespace herald
