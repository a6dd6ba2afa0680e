#include "fueter/fields.hpp"

#include <stdexcept>

namespace fueter {

Poly FirstOrderOp::apply(const Poly& p) const {
    Poly out(p.num_vars());
    for (int v = 0; v < num_vars(); ++v) {
        const GaussRat& c = coeff(v);
        if (c.is_zero()) continue;
        out += p.derivative(v) * c;
    }
    return out;
}

FirstOrderOp FirstOrderOp::conj() const {
    FirstOrderOp out(num_vars());
    for (int v = 0; v < num_vars(); ++v) out.set_coeff(v, coeff(v).conj());
    return out;
}

Poly FirstOrderOp::symbol() const {
    Poly out(num_vars());
    for (int v = 0; v < num_vars(); ++v) out += Poly::variable(num_vars(), v) * coeff(v);
    return out;
}

FirstOrderOp& FirstOrderOp::operator+=(const FirstOrderOp& o) {
    if (o.num_vars() != num_vars()) throw std::invalid_argument("FirstOrderOp: dimension mismatch");
    for (std::size_t v = 0; v < coeffs_.size(); ++v) coeffs_[v] += o.coeffs_[v];
    return *this;
}

FirstOrderOp& FirstOrderOp::operator*=(const GaussRat& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
}

namespace {

void check_index(const ComplexParams& params, int a, int aprime) {
    if (a < 0 || a >= params.num_unprimed() || aprime < 0 || aprime > 1)
        throw std::out_of_range("vector field index out of range");
}

// The defining table: for A = 2l, 2l+1 and block coordinates x_{4l+1..4l+4}
//   Z_{(2l)0'}   =  d1 + i d2     Z_{(2l)1'}   = -d3 - i d4
//   Z_{(2l+1)0'} =  d3 - i d4     Z_{(2l+1)1'} =  d1 - i d2
FirstOrderOp make_lowered(const ComplexParams& params, int a, int aprime) {
    FirstOrderOp op(params.num_vars());
    const int base = 4 * (a / 2);
    const bool even = a % 2 == 0;
    if (even && aprime == 0) {
        op.set_coeff(base, 1);
        op.set_coeff(base + 1, GaussRat(0, 1));
    } else if (even) {
        op.set_coeff(base + 2, -1);
        op.set_coeff(base + 3, GaussRat(0, -1));
    } else if (aprime == 0) {
        op.set_coeff(base + 2, 1);
        op.set_coeff(base + 3, GaussRat(0, -1));
    } else {
        op.set_coeff(base, 1);
        op.set_coeff(base + 1, GaussRat(0, -1));
    }
    return op;
}

FirstOrderOp make_raised(const ComplexParams& params, int a, int aprime) {
    const EpsilonTables eps(params.n());
    FirstOrderOp op(params.num_vars());
    for (int bp = 0; bp < 2; ++bp)
        if (const int e = eps.primed_upper(bp, aprime); e != 0) op += e * make_lowered(params, a, bp);
    return op;
}

FirstOrderOp make_conj_raised(const ComplexParams& params, int a, int aprime) {
    const EpsilonTables eps(params.n());
    FirstOrderOp op(params.num_vars());
    for (int b = 0; b < params.num_unprimed(); ++b)
        for (int bp = 0; bp < 2; ++bp)
            if (const int e = eps.unprimed_upper(b, a) * eps.primed_upper(bp, aprime); e != 0)
                op += e * make_lowered(params, b, bp);
    return op;
}

FirstOrderOp make_mixed(const ComplexParams& params, int a, int aprime) {
    const EpsilonTables eps(params.n());
    FirstOrderOp op(params.num_vars());
    for (int b = 0; b < params.num_unprimed(); ++b)
        if (const int e = eps.unprimed_upper(b, a); e != 0) op += e * make_lowered(params, b, aprime);
    return op;
}

}  // namespace

FirstOrderOp field_operator(const ComplexParams& params, const VectorFieldId& id) {
    check_index(params, id.a, id.aprime);
    switch (id.variant) {
        case FieldVariant::Lowered: return make_lowered(params, id.a, id.aprime);
        case FieldVariant::Raised: return make_raised(params, id.a, id.aprime);
        case FieldVariant::ConjRaised: return make_conj_raised(params, id.a, id.aprime);
        case FieldVariant::Mixed: return make_mixed(params, id.a, id.aprime);
        case FieldVariant::LinearForm: break;
    }
    throw std::invalid_argument("field_operator: z_{AA'} is a polynomial, not an operator");
}

Poly z_linear_form(const ComplexParams& params, int a, int aprime) {
    check_index(params, a, aprime);
    return make_lowered(params, a, aprime).conj().symbol();
}

Poly apply_field(const ComplexParams& params, const VectorFieldId& id, const Poly& p) {
    return field_operator(params, id).apply(p);
}

Poly apply_delta(const ComplexParams& params, int a, int aprime, const Poly& p) {
    const FirstOrderOp op = field_operator(params, {a, aprime, FieldVariant::Mixed});
    Poly weight = op.apply(norm_squared_poly(params.num_vars()));
    return op.apply(p) - weight * GaussRat(2) * p;
}

Poly laplacian_apply(const Poly& p) {
    Poly out(p.num_vars());
    for (int v = 0; v < p.num_vars(); ++v) out += p.derivative(v).derivative(v);
    return out;
}

FieldTable::FieldTable(const ComplexParams& params) : params_(params) {
    const Poly phi = norm_squared_poly(params.num_vars());
    for (int a = 0; a < params.num_unprimed(); ++a)
        for (int ap = 0; ap < 2; ++ap) {
            raised_.push_back(make_raised(params, a, ap));
            mixed_.push_back(make_mixed(params, a, ap));
            weight_terms_.push_back(mixed_.back().apply(phi) * GaussRat(-2));
        }
}

Poly FieldTable::delta(int a, int aprime, const Poly& p) const {
    return mixed(a, aprime).apply(p) + weight_terms_[idx(a, aprime)] * p;
}

}  // namespace fueter
