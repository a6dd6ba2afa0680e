#include "fueter/operators.hpp"

namespace fueter {

Spinor1Field ComplexOperators::d0(const Spinor0Field& f) const {
    const auto& p = params();
    Spinor1Field out(p);
    for (int t = 0; t < p.k(); ++t)
        for (int a = 0; a < p.num_unprimed(); ++a) {
            Poly& dst = out.component(out.index(t, a));
            for (int ap = 0; ap < 2; ++ap) dst += table_.raised(a, ap).apply(f.component(f.index(t + ap)));
        }
    return out;
}

Spinor2Field ComplexOperators::d1(const Spinor1Field& h) const {
    const auto& p = params();
    Spinor2Field out(p);
    for (int i = 0; i < out.size(); ++i) {
        const UnprimedPair pair = out.pair_of(i);
        const int s = out.slot_of(i).ones;
        Poly& dst = out.component(i);
        for (int ap = 0; ap < 2; ++ap) {
            dst += table_.raised(pair.a, ap).apply(h.component(h.index(s + ap, pair.b)));
            dst -= table_.raised(pair.b, ap).apply(h.component(h.index(s + ap, pair.a)));
        }
    }
    return out;
}

Spinor0Field ComplexOperators::d0star(const Spinor1Field& f) const {
    const auto& p = params();
    Spinor0Field out(p);
    for (int j = 0; j <= p.k(); ++j) {
        Poly& dst = out.component(j);
        for (const auto& split : head_decomposition(PrimedSlot(p.k(), j))) {
            Poly sum(p.num_vars());
            for (int a = 0; a < p.num_unprimed(); ++a)
                sum += table_.delta(a, split.head, f.component(f.index(split.tail.ones, a)));
            dst += sum * GaussRat(split.weight);
        }
    }
    return out;
}

Spinor1Field ComplexOperators::d1star(const Spinor2Field& g) const {
    const auto& p = params();
    Spinor1Field out(p);
    for (int i = 0; i < out.size(); ++i) {
        const int b = out.unprimed_of(i);
        Poly& dst = out.component(i);
        for (const auto& split : head_decomposition(out.slot_of(i))) {
            Poly sum(p.num_vars());
            for (int a = 0; a < p.num_unprimed(); ++a) {
                if (a == b) continue;
                sum += table_.delta(a, split.head, g.read(a, b, split.tail.ones));
            }
            dst += sum * GaussRat(2 * split.weight);
        }
    }
    return out;
}

Spinor1Field ComplexOperators::box(const Spinor1Field& f) const { return d0(d0star(f)) + d1star(d1(f)); }

Spinor1Field d0_apply(const Spinor0Field& f) { return ComplexOperators(f.params()).d0(f); }
Spinor2Field d1_apply(const Spinor1Field& h) { return ComplexOperators(h.params()).d1(h); }
Spinor0Field d0star_apply(const Spinor1Field& f) { return ComplexOperators(f.params()).d0star(f); }
Spinor1Field d1star_apply(const Spinor2Field& g) { return ComplexOperators(g.params()).d1star(g); }
Spinor1Field box_phi_apply(const Spinor1Field& f) { return ComplexOperators(f.params()).box(f); }

}  // namespace fueter
