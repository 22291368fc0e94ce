#include "herald/hilbert.hpp"

#include <stdexcept>

namespace herald {

char to_char(AtomLevel level) {
    switch (level) {
        case AtomLevel::GroundL: return 'L';
        case AtomLevel::GroundR: return 'R';
        case AtomLevel::Excited: return 'e';
    }
    return '?';
}

char to_char(Polarization pol) {
    return pol == Polarization::Left ? 'L' : 'R';
}

std::string to_string(const BasisState& state) {
    std::string out = "|";
    out += to_char(state.atom_a);
    out += ',';
    out += to_char(state.atom_b);
    out += ';';
    out += std::to_string(state.photons.n_left);
    out += ',';
    out += std::to_string(state.photons.n_right);
    out += '>';
    return out;
}

HilbertSpace::HilbertSpace(int fock_cutoff) : cutoff_(fock_cutoff) {
    if (fock_cutoff < 1) {
        throw std::invalid_argument(
            "HilbertSpace: fock cutoff must be >= 1 (one photon is injected)");
    }
    const int modes = fock_cutoff + 1;
    dim_ = kAtomLevelCount * kAtomLevelCount * modes * modes;
}

bool HilbertSpace::contains(const BasisState& state) const noexcept {
    const auto ok_photon = [&](int n) { return n >= 0 && n <= cutoff_; };
    return ok_photon(state.photons.n_left) && ok_photon(state.photons.n_right);
}

int HilbertSpace::index_of(const BasisState& state) const {
    if (!contains(state)) {
        throw std::invalid_argument("HilbertSpace::index_of: photon occupation " +
                                    to_string(state) + " exceeds cutoff " +
                                    std::to_string(cutoff_));
    }
    const int modes = cutoff_ + 1;
    const int a = static_cast<int>(state.atom_a);
    const int b = static_cast<int>(state.atom_b);
    return ((a * kAtomLevelCount + b) * modes + state.photons.n_left) * modes +
           state.photons.n_right;
}

BasisState HilbertSpace::label_of(int index) const {
    if (index < 0 || index >= dim_) {
        throw std::out_of_range("HilbertSpace::label_of: index " +
                                std::to_string(index) + " outside [0, " +
                                std::to_string(dim_) + ")");
    }
    const int modes = cutoff_ + 1;
    BasisState state;
    state.photons.n_right = index % modes;
    index /= modes;
    state.photons.n_left = index % modes;
    index /= modes;
    state.atom_b = static_cast<AtomLevel>(index % kAtomLevelCount);
    index /= kAtomLevelCount;
    state.atom_a = static_cast<AtomLevel>(index);
    return state;
}

BasisState initial_ket() {
    return BasisState{AtomLevel::GroundL, AtomLevel::GroundL, PhotonConfig{1, 0}};
}

BasisState ground_ket() {
    return BasisState{AtomLevel::GroundL, AtomLevel::GroundL, PhotonConfig{0, 0}};
}

BasisState entangled_component_ket(Atom which) {
    if (which == Atom::A) {
        return BasisState{AtomLevel::GroundR, AtomLevel::GroundL, PhotonConfig{0, 0}};
    }
    return BasisState{AtomLevel::GroundL, AtomLevel::GroundR, PhotonConfig{0, 0}};
}

}  // namespace herald
