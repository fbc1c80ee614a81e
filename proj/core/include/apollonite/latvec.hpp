#pragma once

// Lattice vectors v(C,C') and affine vectors a(C,C') of tangent pairs, the
// peak matrix A_C, and the lattices Lambda_C and L_C.

#include <array>
#include <vector>

#include "apollonite/exactmath.hpp"
#include "apollonite/packing.hpp"

namespace apollonite {

struct VAPair {
    GaussInt v, a;
    friend bool operator==(const VAPair&, const VAPair&) = default;
};

// The pairs between the parents of a quadruple (C0,C1,C2,C3):
// p21 = (v,a)(C2,C1), p32 = (v,a)(C3,C2), p13 = (v,a)(C1,C3).
struct VATriple {
    VAPair p21, p32, p13;
    friend bool operator==(const VATriple&, const VATriple&) = default;
};

// Pairs of the base quadruple at z. See the decisions ledger for the sign
// convention; these are the values compatible with a_{i0} = A_{C0} v_{i0}.
VATriple base_vectors(GaussInt z);

// Pairs after the parent rotation (C0,C2,C3,C1).
VATriple rotate_pairs(const VATriple& t, int r = 1);

// Pairs of the successor quadruple (2(C0+C2+C3)-C1, C0, C2, C3):
//   v(C2,C0) = v21 - i v32,  v(C0,C3) = v13 + i v32,
//   a(C2,C0) = a21 + i a32,  a(C0,C3) = a13 - i a32.
VATriple successor_vectors(const VATriple& t);

// (v_{i0}, a_{i0}) for i = 1,2,3:  v10 = v13 - i v21,  a10 = a13 + i a21, and rotations.
struct ChildVectors {
    std::array<VAPair, 3> to_child;  // index i-1 holds (v,a)(C_i, C_0)
    // (v,a)(C_0, C_i) = (i v_{i0}, -i a_{i0})
    VAPair from_child(int i) const;
};
ChildVectors child_vectors(const VATriple& t);

// A_C = 1/2 [[r + x1, x2], [x2, r - x1]]
RatSym2 peak_matrix(const Circle& c);

// A full-rank sublattice of Z^2 with a Hermite basis (p,0), (r,s), 0 <= r < p.
class Lattice2 {
public:
    Lattice2() = default;
    Lattice2(GaussInt b1, GaussInt b2);

    GaussInt b1() const { return b1_; }
    GaussInt b2() const { return b2_; }
    // Im(conj(b1) b2)
    Int det() const { return b1_.cross(b2_); }
    Int index() const { return p_ * s_; }
    bool contains(GaussInt x) const;
    // x = residue + lambda with residue in [0,p) x [0,s)
    GaussInt reduce(GaussInt x, GaussInt* lambda = nullptr) const;
    Int residue_index(GaussInt residue) const { return residue.im * p_ + residue.re; }
    // coefficients (k1,k2) with lambda = k1 b1 + k2 b2
    std::pair<Int, Int> coords(GaussInt lambda) const;
    std::vector<GaussInt> residues() const;
    // lattice points inside the closed box
    std::vector<GaussInt> points_in(Int x0, Int x1, Int y0, Int y1) const;
    Int hermite_p() const { return p_; }
    Int hermite_r() const { return r_; }
    Int hermite_s() const { return s_; }

    friend bool operator==(const Lattice2& a, const Lattice2& b) {
        return a.p_ == b.p_ && a.r_ == b.r_ && a.s_ == b.s_;
    }

private:
    GaussInt b1_, b2_;
    Int p_ = 1, r_ = 0, s_ = 1;
};

struct LCReport {
    Lattice2 lambda;          // Lambda_C from the recursion
    bool lambda_in_LC = false; // A_C v integral for the basis
    Int extra_residues = 0;    // residues of Z^2 / Lambda_C other than 0 lying in L_C
    bool equal() const { return lambda_in_LC && extra_residues == 0; }
};

// Sweep the residues of Z^2 / Lambda_C and keep those x with A_C x integral.
LCReport lattice_LC(const Circle& c, const Lattice2& lambda);

}  // namespace apollonite
