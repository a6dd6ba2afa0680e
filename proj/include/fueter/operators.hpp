#ifndef FUETER_OPERATORS_HPP
#define FUETER_OPERATORS_HPP

// The first two operators of the k-Cauchy-Fueter complex, their adjoints with
// respect to the Gaussian weight e^{-2|x|^2}, and the associated Laplacian.

#include "fueter/fields.hpp"
#include "fueter/sections.hpp"

namespace fueter {

/// (D0 f)_{tail, A} = sum_{A'} Z_A^{A'} f_{A' tail}
Spinor1Field d0_apply(const Spinor0Field& f);

/// (D1 h)_{AB, tail} = sum_{A'} (Z_A^{A'} h_{B, A' tail} - Z_B^{A'} h_{A, A' tail})
Spinor2Field d1_apply(const Spinor1Field& h);

/// (D0* f)_{A1'...Ak'} = sum_A delta^A_{(A1'} f_{A2'...Ak') A}
Spinor0Field d0star_apply(const Spinor1Field& f);

/// Weighted adjoint of d1_apply:
/// (D1* g)_{B, A2'...Ak'} = 2 sum_A delta^A_{(A2'} g_{AB, A3'...Ak')}
/// with g_{AB} read antisymmetrically.
Spinor1Field d1star_apply(const Spinor2Field& g);

/// D0 D0* + D1* D1
Spinor1Field box_phi_apply(const Spinor1Field& f);

/// The same operators with a shared precomputed field table.
class ComplexOperators {
public:
    explicit ComplexOperators(const ComplexParams& params) : table_(params) {}

    const FieldTable& table() const { return table_; }
    const ComplexParams& params() const { return table_.params(); }

    Spinor1Field d0(const Spinor0Field& f) const;
    Spinor2Field d1(const Spinor1Field& h) const;
    Spinor0Field d0star(const Spinor1Field& f) const;
    Spinor1Field d1star(const Spinor2Field& g) const;
    Spinor1Field box(const Spinor1Field& f) const;

private:
    FieldTable table_;
};

}  // namespace fueter

#endif  // FUETER_OPERATORS_HPP
