#include "sge/generator.hpp"

#include <complex>

namespace sge {

namespace {

using basis::e;
using basis::g;
using basis::mu;

// |i><j| on one atom
ComplexMatrix level_op(int i, int j) {
  ComplexMatrix m(3);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix on_a(const ComplexMatrix& m) { return kron(m, ComplexMatrix::identity(3)); }
ComplexMatrix on_b(const ComplexMatrix& m) { return kron(ComplexMatrix::identity(3), m); }

// Row-major vectorization: vec(A rho B) = (A (x) B^T) vec(rho).
ComplexMatrix sandwich(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix bt(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) bt(i, j) = b(j, i);
  return kron(a, bt);
}

// kappa * (2 A rho B - B A rho - rho B A) in superoperator form
void add_dissipator(ComplexMatrix& op, double kappa, const ComplexMatrix& a,
                    const ComplexMatrix& b) {
  const ComplexMatrix id = ComplexMatrix::identity(a.dim());
  const ComplexMatrix ba = b * a;
  ComplexMatrix term = sandwich(a, b);
  term *= 2.0;
  term -= sandwich(ba, id);
  term -= sandwich(id, ba);
  term *= kappa;
  op += term;
}

}  // namespace

Liouvillian::Liouvillian(const SystemParams& p, bool pumped) {
  p.validate();

  const ComplexMatrix s_eg = level_op(e, g), s_ge = level_op(g, e);
  const ComplexMatrix s_mg = level_op(mu, g), s_gm = level_op(g, mu);

  const ComplexMatrix eg_a = on_a(s_eg), ge_a = on_a(s_ge);
  const ComplexMatrix eg_b = on_b(s_eg), ge_b = on_b(s_ge);
  const ComplexMatrix mg_a = on_a(s_mg), gm_a = on_a(s_gm);
  const ComplexMatrix mg_b = on_b(s_mg), gm_b = on_b(s_gm);

  op_ = ComplexMatrix(81);

  // coherent level shift: -i [V, rho], V = G1 (eg_A ge_B + h.c.) + G2 (mg_A gm_B + h.c.)
  ComplexMatrix v = eg_a * ge_b;
  v += ge_a * eg_b;
  v *= p.G1;
  {
    ComplexMatrix v2 = mg_a * gm_b;
    v2 += gm_a * mg_b;
    v2 *= p.G2();
    v += v2;
  }
  const ComplexMatrix id9 = ComplexMatrix::identity(9);
  ComplexMatrix comm = sandwich(v, id9);
  comm -= sandwich(id9, v);
  comm *= std::complex<double>(0.0, -1.0);
  op_ += comm;

  // single-atom spontaneous emission
  add_dissipator(op_, p.gamma1, ge_a, eg_a);
  add_dissipator(op_, p.gamma1, ge_b, eg_b);
  add_dissipator(op_, p.gamma2(), gm_a, mg_a);
  add_dissipator(op_, p.gamma2(), gm_b, mg_b);

  // vacuum-mediated cross damping (+ hermitian conjugate partners)
  add_dissipator(op_, p.Gamma1, ge_b, eg_a);
  add_dissipator(op_, p.Gamma1, ge_a, eg_b);
  add_dissipator(op_, p.Gamma2(), gm_b, mg_a);
  add_dissipator(op_, p.Gamma2(), gm_a, mg_b);

  if (pumped) {
    // incoherent pumping as inverted spontaneous emission; the jump
    // operators are eg/mg, so the anticommutator part carries sigma_gg
    add_dissipator(op_, p.Lambda1, eg_a, ge_a);
    add_dissipator(op_, p.Lambda1, eg_b, ge_b);
    add_dissipator(op_, p.Lambda2, mg_a, gm_a);
    add_dissipator(op_, p.Lambda2, mg_b, gm_b);
  }
}

ComplexMatrix Liouvillian::apply(const ComplexMatrix& rho) const {
  ComplexMatrix out(9);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      std::complex<double> acc = 0.0;
      const int row = 9 * i + j;
      for (int k = 0; k < 9; ++k)
        for (int l = 0; l < 9; ++l) {
          const std::complex<double> lkl = op_(row, 9 * k + l);
          if (lkl != 0.0) acc += lkl * rho(k, l);
        }
      out(i, j) = acc;
    }
  return out;
}

Liouvillian build_generator(const SystemParams& params, bool pumped) {
  return Liouvillian(params, pumped);
}

ReducedState rhs_pumpless(const ReducedState& s, const SystemParams& p) {
  const double p2 = s.pop[1], p3 = s.pop[2], p6 = s.pop[5], p7 = s.pop[6], p8 = s.pop[7];
  const std::complex<double> r37 = s.rho37, r68 = s.rho68;
  const double re37 = r37.real(), im37 = r37.imag();
  const double re68 = r68.real(), im68 = r68.imag();
  const double g1 = p.gamma1, g2 = p.gamma2();
  const double Gm1 = p.Gamma1, Gm2 = p.Gamma2();
  const double G1 = p.G1, G2 = p.G2();
  const std::complex<double> i1(0.0, 1.0);

  // rho73 + rho37 = 2 Re rho37; -i G (rho73 - rho37) = -2 G Im rho37
  ReducedState d;
  d.pop[1] = -2.0 * (g1 + g2) * p2;
  d.pop[2] = -2.0 * g1 * p3 + 2.0 * g2 * p2 - 2.0 * Gm1 * re37 - 2.0 * G1 * im37;
  d.rho37 = -2.0 * g1 * r37 - Gm1 * (p7 + p3) - i1 * G1 * (p7 - p3);
  d.pop[5] = -2.0 * g2 * p6 - 2.0 * Gm2 * re68 - 2.0 * G2 * im68;
  d.rho68 = -2.0 * g2 * r68 - Gm2 * (p8 + p6) - i1 * G2 * (p8 - p6);
  d.pop[6] = -2.0 * g1 * p7 - 2.0 * Gm1 * re37 + 2.0 * G1 * im37;
  d.pop[7] = -2.0 * g2 * p8 + 2.0 * g1 * p2 - 2.0 * Gm2 * re68 + 2.0 * G2 * im68;
  d.pop[8] = 2.0 * g1 * (p3 + p7) + 2.0 * g2 * (p6 + p8) + 4.0 * Gm1 * re37 +
             4.0 * Gm2 * re68;
  return d;
}

ReducedState rhs_pumped(const ReducedState& s, const SystemParams& p) {
  const double p1 = s.pop[0], p2 = s.pop[1], p3 = s.pop[2], p4 = s.pop[3], p5 = s.pop[4],
               p6 = s.pop[5], p7 = s.pop[6], p8 = s.pop[7], p9 = s.pop[8];
  const std::complex<double> r37 = s.rho37, r68 = s.rho68;
  const double re37 = r37.real(), im37 = r37.imag();
  const double re68 = r68.real(), im68 = r68.imag();
  const double g1 = p.gamma1, g2 = p.gamma2();
  const double Gm1 = p.Gamma1, Gm2 = p.Gamma2();
  const double G1 = p.G1, G2 = p.G2();
  const double L1 = p.Lambda1, L2 = p.Lambda2;
  const double s1 = p.s1(), s2 = p.s2();
  const std::complex<double> i1(0.0, 1.0);

  ReducedState d;
  d.pop[0] = -4.0 * g1 * p1 + 2.0 * L1 * (p7 + p3);
  d.pop[1] = -2.0 * (g1 + g2) * p2 + 2.0 * L1 * p8 + 2.0 * L2 * p3;
  d.pop[2] = -2.0 * s1 * p3 + 2.0 * g2 * p2 + 2.0 * g1 * p1 + 2.0 * L1 * p9 -
             2.0 * Gm1 * re37 - 2.0 * G1 * im37;
  d.rho37 = -2.0 * s1 * r37 - Gm1 * (p7 + p3) + 2.0 * Gm1 * p1 - i1 * G1 * (p7 - p3);
  d.pop[3] = -2.0 * (g1 + g2) * p4 + 2.0 * L1 * p6 + 2.0 * L2 * p7;
  d.pop[4] = -4.0 * g2 * p5 + 2.0 * L2 * (p6 + p8);
  d.pop[5] = -2.0 * s2 * p6 + 2.0 * g1 * p4 + 2.0 * g2 * p5 + 2.0 * L2 * p9 -
             2.0 * Gm2 * re68 - 2.0 * G2 * im68;
  d.rho68 = -2.0 * s2 * r68 - Gm2 * (p8 + p6) + 2.0 * Gm2 * p5 - i1 * G2 * (p8 - p6);
  d.pop[6] = -2.0 * s1 * p7 + 2.0 * g1 * p1 + 2.0 * g2 * p4 + 2.0 * L1 * p9 -
             2.0 * Gm1 * re37 + 2.0 * G1 * im37;
  d.pop[7] = -2.0 * s2 * p8 + 2.0 * g1 * p2 + 2.0 * g2 * p5 + 2.0 * L2 * p9 -
             2.0 * Gm2 * re68 + 2.0 * G2 * im68;
  d.pop[8] = 2.0 * g1 * (p3 + p7) + 2.0 * g2 * (p6 + p8) - 4.0 * (L1 + L2) * p9 +
             4.0 * Gm1 * re37 + 4.0 * Gm2 * re68;
  return d;
}

}  // namespace sge
