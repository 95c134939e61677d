#include "tdq/suite.hpp"

#include <fnmatch.h>

#include <chrono>
#include <random>
#include <tuple>

#include "tdq/qseries.hpp"
#include "tdq/qtet.hpp"

namespace tdq {

namespace {

Matrix id(std::size_t n) { return Matrix::identity(n); }

std::string on(const std::string& what, const Actor& x) { return what + " [X=" + x.name + "]"; }

std::string idx(const std::string& what, int i) { return what + " i=" + std::to_string(i); }

std::string idx(const std::string& what, int i, int j) {
  return what + " i=" + std::to_string(i) + " j=" + std::to_string(j);
}

const Scalar& q_of(const SuiteContext& c) { return c.tds.params().q(); }
const Scalar& a_of(const SuiteContext& c) { return c.tds.params().a(); }

/// [A, [A, X]_q]_{q^{-1}}
Matrix nested(const Matrix& A, const Matrix& X, const Scalar& q) {
  return qcommutator(A, qcommutator(A, X, q), q.inverse());
}

void idempotent_family(const std::string& tag, const Matrix& m, const std::vector<Matrix>& es,
                       const std::vector<Scalar>& theta, const Matrix& other, Checker& ck) {
  const std::size_t n = m.dim();
  Matrix sum(n), spectral(n), prod = id(n);
  for (std::size_t i = 0; i < es.size(); ++i) {
    sum += es[i];
    spectral += theta[i] * es[i];
    prod = prod * (m - theta[i] * id(n));
    for (std::size_t j = 0; j < es.size(); ++j) {
      const std::string ij = " i=" + std::to_string(i) + " j=" + std::to_string(j);
      if (i == j) ck.equal(tag + "_i^2 = " + tag + "_i" + ij, es[i] * es[i], es[i]);
      else ck.zero(tag + "_i " + tag + "_j = 0" + ij, es[i] * es[j]);
    }
  }
  ck.equal("sum " + tag + "_i = I", sum, id(n));
  ck.equal("spectral sum of " + tag, spectral, m);
  ck.zero("minimal polynomial of " + tag, prod);
  ck.zero(tag + "_i (other) " + tag + "_j = 0 for |i-j| > 1", tridiagonal_violation(es, other));
}

void c1(const SuiteContext& c, Checker& ck) {
  const auto& t = c.tds;
  idempotent_family("E", t.a(), t.e(), t.theta(), t.astar(), ck);
  idempotent_family("E*", t.astar(), t.estar(), t.thetastar(), t.a(), ck);
  const auto sp = eigenvalues(t.params());
  ck.holds("theta from eigform", sp.theta == t.theta());
  ck.holds("thetastar from eigform", sp.thetastar == t.thetastar());
  ck.holds("given orderings and their reversals are standard", confirm_standard_orderings(t));
}

void c2(const SuiteContext& c, Checker& ck) {
  const Scalar& q = q_of(c);
  const Scalar& a = a_of(c);
  const int d = c.tds.d();
  const auto& th = c.tds.theta();
  const Scalar den = q * q - pow(q, -2);
  auto at = [&](int i) { return th[static_cast<std::size_t>(i)]; };
  for (int i = 1; i <= d; ++i) {
    ck.equal(idx("(q theta_{i-1} - q^{-1} theta_i)/(q^2-q^{-2}) = a q^{d-2i+1}", i),
             (q * at(i - 1) - q.inverse() * at(i)) / den, a * pow(q, d - 2 * i + 1));
    ck.equal(idx("(q theta_i - q^{-1} theta_{i-1})/(q^2-q^{-2}) = a^{-1} q^{2i-d-1}", i),
             (q * at(i) - q.inverse() * at(i - 1)) / den, a.inverse() * pow(q, 2 * i - d - 1));
  }
  for (int i = 0; i <= d; ++i)
    for (int j : {i - 1, i + 1}) {
      if (j < 0 || j > d) continue;
      ck.equal(idx("two factors multiply to 1", i, j),
               ((q * at(i) - q.inverse() * at(j)) / den) * ((q * at(j) - q.inverse() * at(i)) / den),
               Scalar(1));
    }
}

void c3(const SuiteContext& c, Checker& ck) {
  const Scalar& q = q_of(c);
  const Matrix& A = c.tds.a();
  const Matrix& As = c.tds.astar();
  const Scalar k = pow(q * q - pow(q, -2), 2);
  const Scalar q3 = qnumber(3, q);
  ck.equal("[A,[A,[A,A*]_q]_{q^{-1}}] = (q^2-q^{-2})^2 [A*,A]", commutator(A, nested(A, As, q)),
           k * commutator(As, A));
  ck.equal("[A*,[A*,[A*,A]_q]_{q^{-1}}] = (q^2-q^{-2})^2 [A,A*]", commutator(As, nested(As, A, q)),
           k * commutator(A, As));
  for (const auto& [x, y, tag] : {std::tuple{&A, &As, "A, A*"}, std::tuple{&As, &A, "A*, A"}}) {
    const Matrix& X = *x;
    const Matrix& Y = *y;
    ck.equal(std::string("[X,[X,Y]_q]_{q^{-1}} expanded (") + tag + ")", nested(X, Y, q),
             X * X * Y - (q * q + pow(q, -2)) * X * Y * X + Y * X * X);
    ck.equal(std::string("[X,[X,[X,Y]_q]_{q^{-1}}] expanded (") + tag + ")",
             commutator(X, nested(X, Y, q)),
             X * X * X * Y - q3 * X * X * Y * X + q3 * X * Y * X * X - Y * X * X * X);
  }
}

/// The qualifying pairs (psi, M^{-1}) and (N^{-1}, psi).
struct Pair {
  const char* name;
  const Matrix* x;
  const Matrix* y;
};

std::vector<Pair> qualifying_pairs(const OperatorSet& ops) {
  return {{"(psi, M^{-1})", &ops.psi, &ops.Minv}, {"(N^{-1}, psi)", &ops.Ninv, &ops.psi}};
}

/// Conditions (i) and (ii) of the X, Y equivalence.
void pair_conditions(const SuiteContext& c, const Pair& p, Checker& ck) {
  const Scalar& q = q_of(c);
  const Matrix& A = c.tds.a();
  const Scalar den = q * q - pow(q, -2);
  const Matrix& X = *p.x;
  const Matrix& Y = *p.y;
  const Matrix C = Y + (q * X * A - q.inverse() * A * X) / den;
  const Matrix D = X + (q * A * Y - q.inverse() * Y * A) / den;
  const std::string tag = std::string(" ") + p.name;
  ck.zero("(i) X tridiagonal" + tag, tridiagonal_violation(c.tds.e(), X));
  ck.commute("(i) [A, Y + (qXA - q^{-1}AX)/(q^2-q^{-2})] = 0" + tag, A, C);
  ck.zero("(ii) Y tridiagonal" + tag, tridiagonal_violation(c.tds.e(), Y));
  ck.commute("(ii) [A, X + (qAY - q^{-1}YA)/(q^2-q^{-2})] = 0" + tag, A, D);
}

void c4(const SuiteContext& c, Checker& ck) {
  const Scalar& q = q_of(c);
  const Matrix& A = c.tds.a();
  const Scalar den = q * q - pow(q, -2);
  const Scalar k = den * den;
  for (const auto& act : c.actors) {
    const Matrix& X = act.x;
    ck.commute(on("[A, X + [A,[A,X]_q]_{q^{-1}}/(q^2-q^{-2})^2] = 0", act), A, X + nested(A, X, q) / k);
    ck.equal(on("[A,[A,[A,X]_q]_{q^{-1}}] = (q^2-q^{-2})^2 [X,A]", act), commutator(A, nested(A, X, q)),
             k * commutator(X, A));
  }
  for (const auto& p : qualifying_pairs(*c.ops)) {
    pair_conditions(c, p, ck);
    const Matrix& X = *p.x;
    const Matrix& Y = *p.y;
    const Matrix C = Y + (q * X * A - q.inverse() * A * X) / den;
    const Matrix D = X + (q * A * Y - q.inverse() * Y * A) / den;
    ck.equal(std::string("CD1 ") + p.name, X + nested(A, X, q) / k, D - qcommutator(A, C, q) / den);
    ck.equal(std::string("CD2 ") + p.name, Y + nested(A, Y, q) / k, C - qcommutator(D, A, q) / den);
  }
}

std::vector<const Actor*> all_of(const SuiteContext& c) {
  std::vector<const Actor*> out;
  for (const auto& a : c.actors) out.push_back(&a);
  for (const auto& a : c.arbitrary) out.push_back(&a);
  return out;
}

void c5(const SuiteContext& c, Checker& ck) {
  const Matrix& A = c.tds.a();
  auto xs = all_of(c);
  std::vector<Actor> commuting = {{"W", c.ops->W}, {"W^{-1}", c.ops->Winv}, {"Lambda", c.ops->Lambda}};
  for (const auto& a : commuting) xs.push_back(&a);
  for (const Actor* act : xs) {
    const Matrix xv = vee(act->x, c.tds);
    ck.commute(on("[A, X^vee] = 0", *act), A, xv);
    ck.holds(on("[A, X] = 0 iff X = X^vee", *act), commutator(A, act->x).is_zero() == (act->x == xv));
  }
  for (const auto& a : commuting) ck.equal(on("X = X^vee", a), a.x, vee(a.x, c.tds));
}

void c6(const SuiteContext& c, Checker& ck) {
  const Scalar& q = q_of(c);
  const Scalar qq = q - q.inverse();
  const Matrix& A = c.tds.a();
  for (const Actor* act : all_of(c)) {
    const Matrix& X = act->x;
    const Matrix xv = vee(X, c.tds);
    ck.equal(on("(AX)^vee = A X^vee", *act), vee(A * X, c.tds), A * xv);
    ck.equal(on("(XA)^vee = A X^vee", *act), vee(X * A, c.tds), A * xv);
    ck.zero(on("[A, X]^vee = 0", *act), vee(commutator(A, X), c.tds));
    ck.equal(on("([A, X]_q)^vee = (q-q^{-1}) A X^vee", *act), vee(qcommutator(A, X, q), c.tds), qq * A * xv);
    ck.equal(on("([A, X]_{q^{-1}})^vee = -(q-q^{-1}) A X^vee", *act),
             vee(qcommutator(A, X, q.inverse()), c.tds), -qq * A * xv);
  }
}

void c7(const SuiteContext& c, Checker& ck) {
  const Scalar& q = q_of(c);
  const Matrix& A = c.tds.a();
  const Scalar k = pow(q * q - pow(q, -2), 2);
  const Matrix f = id(c.tds.dim()) - (A * A) / pow(q + q.inverse(), 2);
  for (const auto& act : c.actors)
    ck.equal(on("X + [A,[A,X]_q]_{q^{-1}}/(q^2-q^{-2})^2 = (I - A^2/(q+q^{-1})^2) X^vee", act),
             act.x + nested(A, act.x, q) / k, f * vee(act.x, c.tds));
}

void c8(const SuiteContext& c, Checker& ck) {
  check_t_scalars(c.tds.params(), ck);
  const Scalar& q = q_of(c);
  const auto t = t_scalars(c.tds.params());
  const auto& th = c.tds.theta();
  const int d = c.tds.d();
  const Scalar den = q * q - pow(q, -2);
  for (int i = 0; i <= d; ++i)
    for (int j : {i - 1, i + 1}) {
      if (j < 0 || j > d) continue;
      const auto iu = static_cast<std::size_t>(i);
      const auto ju = static_cast<std::size_t>(j);
      ck.equal(idx("t_j/t_i + (q theta_i - q^{-1} theta_j)/(q^2-q^{-2}) = 0", i, j),
               t[ju] / t[iu] + (q * th[iu] - q.inverse() * th[ju]) / den, Scalar(0));
    }
}

void c9(const SuiteContext& c, Checker& ck) {
  const auto& o = *c.ops;
  for (const Actor* act : all_of(c)) {
    const Matrix xv = vee(act->x, c.tds);
    ck.equal(on("(W^{-1} X W)^vee = X^vee", *act), vee(o.Winv * act->x * o.W, c.tds), xv);
    ck.equal(on("(W X W^{-1})^vee = X^vee", *act), vee(o.W * act->x * o.Winv, c.tds), xv);
  }
}

void c10(const SuiteContext& c, Checker& ck) {
  const auto& o = *c.ops;
  const Scalar& q = q_of(c);
  const Matrix& A = c.tds.a();
  const Scalar den = q * q - pow(q, -2);
  const Matrix f = id(c.tds.dim()) + A / (q + q.inverse());
  for (const auto& act : c.actors) {
    const Matrix& X = act.x;
    const Matrix rhs = f * vee(X, c.tds);
    ck.equal(on("W^{-1}XW + (qAX - q^{-1}XA)/(q^2-q^{-2}) = (I + A/(q+q^{-1}))X^vee", act),
             o.Winv * X * o.W + (q * A * X - q.inverse() * X * A) / den, rhs);
    ck.equal(on("WXW^{-1} + (qXA - q^{-1}AX)/(q^2-q^{-2}) = (I + A/(q+q^{-1}))X^vee", act),
             o.W * X * o.Winv + (q * X * A - q.inverse() * A * X) / den, rhs);
  }
}

void c11(const SuiteContext& c, Checker& ck) {
  const auto& o = *c.ops;
  const Scalar& q = q_of(c);
  for (const auto& act : c.actors)
    ck.equal(on("WXW^{-1} - W^{-1}XW = [A,X]/(q-q^{-1})", act), o.W * act.x * o.Winv - o.Winv * act.x * o.W,
             commutator(c.tds.a(), act.x) / (q - q.inverse()));
}

void c12(const SuiteContext& c, Checker& ck) {
  const auto& o = *c.ops;
  const Scalar& q = q_of(c);
  const Matrix& A = c.tds.a();
  const Scalar den = (q - q.inverse()) * (q * q - pow(q, -2));
  const Matrix w2 = o.W * o.W;
  const Matrix w2i = o.Winv * o.Winv;
  for (const auto& act : c.actors) {
    const Matrix& X = act.x;
    ck.equal(on("W^{-2}XW^2 = X + [A,[A,X]_q]/((q-q^{-1})(q^2-q^{-2}))", act), w2i * X * w2,
             X + commutator(A, qcommutator(A, X, q)) / den);
    ck.equal(on("W^2XW^{-2} = X + [A,[A,X]_{q^{-1}}]/((q-q^{-1})(q^2-q^{-2}))", act), w2 * X * w2i,
             X + commutator(A, qcommutator(A, X, q.inverse())) / den);
  }
}

void c13(const SuiteContext& c, Checker& ck) {
  const auto& o = *c.ops;
  for (const auto& p : qualifying_pairs(o)) {
    const Matrix& X = *p.x;
    const Matrix& Y = *p.y;
    const Matrix common = o.W * X * o.Winv - Y;
    ck.equal(std::string("WXW^{-1} - Y = X - W^{-1}YW ") + p.name, common, X - o.Winv * Y * o.W);
    ck.commute(std::string("[A, WXW^{-1} - Y] = 0 ") + p.name, c.tds.a(), common);
  }
}

void c14(const SuiteContext& c, Checker& ck) {
  check_W(c.tds, *c.ops, ck);
  check_W_down(c.tds, *c.ops, ck);
}

void c15(const SuiteContext& c, Checker& ck) { check_cv_sums(c.tds, false, ck); }

void c16(const SuiteContext& c, Checker& ck) {
  check_W_expansions(c.tds, *c.ops, false, false, ck);
  check_W_expansions(c.tds, *c.ops, false, true, ck);
}

void c17(const SuiteContext& c, Checker& ck) {
  check_cv_sums(c.tds, true, ck);
  check_W_expansions(c.tds, *c.ops, true, false, ck);
  check_W_expansions(c.tds, *c.ops, true, true, ck);
}

void c18(const SuiteContext& c, Checker& ck) {
  check_split_actions(c.tds, *c.ops, ck);
  check_K_B(c.tds, *c.ops, ck);
}

void c19(const SuiteContext& c, Checker& ck) { check_kA(c.tds, *c.ops, ck); }
void c20(const SuiteContext& c, Checker& ck) { check_kb(c.tds, *c.ops, ck); }
void c21(const SuiteContext& c, Checker& ck) { check_W2K(c.tds, *c.ops, ck); }
void c22(const SuiteContext& c, Checker& ck) { check_WKB_commutators(c.tds, *c.ops, ck); }
void c23(const SuiteContext& c, Checker& ck) { check_A_from_K(c.tds, *c.ops, ck); }
void c24(const SuiteContext& c, Checker& ck) { check_Qpre(c.tds, *c.ops, ck); }
void c25(const SuiteContext& c, Checker& ck) { check_M_N(c.tds, *c.ops, ck); }
void c26(const SuiteContext& c, Checker& ck) { check_Q(c.tds, *c.ops, ck); }
void c27(const SuiteContext& c, Checker& ck) { check_Qinv_tridiagonal(c.tds, *c.ops, ck); }

void c28(const SuiteContext& c, Checker& ck) {
  const auto& o = *c.ops;
  const Scalar& q = q_of(c);
  const Scalar& a = a_of(c);
  const Matrix& A = c.tds.a();
  const Scalar ai = a.inverse();
  equitable_triple_checks("(aA - a^2K, M^{-1}, K)", a * A - a * a * o.K, o.Minv, o.K, q, ck);
  equitable_triple_checks("(a^{-1}A - a^{-2}B, M^{-1}, B)", ai * A - ai * ai * o.B, o.Minv, o.B, q, ck);
  equitable_triple_checks("(K^{-1}, N^{-1}, a^{-1}A - a^{-2}K^{-1})", o.Kinv, o.Ninv,
                          ai * A - ai * ai * o.Kinv, q, ck);
  equitable_triple_checks("(B^{-1}, N^{-1}, aA - a^2B^{-1})", o.Binv, o.Ninv, a * A - a * a * o.Binv, q, ck);
  equitable_triple_checks("(WK^{-1}W^{-1}, Q^{-1}, W^{-1}KW)", o.W * o.Kinv * o.Winv, o.Qinv,
                          o.Winv * o.K * o.W, q, ck);
  equitable_triple_checks("(WB^{-1}W^{-1}, Q^{-1}, W^{-1}BW)", o.W * o.Binv * o.Winv, o.Qinv,
                          o.Winv * o.B * o.W, q, ck);
}

void c29(const SuiteContext& c, Checker& ck) { check_psi_expressions(c.tds, *c.ops, ck); }
void c30(const SuiteContext& c, Checker& ck) { check_psi_twist(c.tds, *c.ops, ck); }
void c31(const SuiteContext& c, Checker& ck) { check_psi_down(c.tds, *c.ops, ck); }
void c32(const SuiteContext& c, Checker& ck) { check_psi_lowering(c.tds, *c.ops, ck); }
void c33(const SuiteContext& c, Checker& ck) { check_Minv_Ninv(c.tds, *c.ops, ck); }

void c34(const SuiteContext& c, Checker& ck) {
  const auto& o = *c.ops;
  const Scalar& q = q_of(c);
  const Scalar& a = a_of(c);
  const Matrix& A = c.tds.a();
  const Scalar den = q * q - pow(q, -2);
  const Matrix rhs = ((a + a.inverse()) / (q + q.inverse())) * id(c.tds.dim());
  ck.equal("psi + (qAM^{-1} - q^{-1}M^{-1}A)/(q^2-q^{-2}) = (a+a^{-1})/(q+q^{-1}) I",
           o.psi + (q * A * o.Minv - q.inverse() * o.Minv * A) / den, rhs);
  ck.equal("psi + (qN^{-1}A - q^{-1}AN^{-1})/(q^2-q^{-2}) = (a+a^{-1})/(q+q^{-1}) I",
           o.psi + (q * o.Ninv * A - q.inverse() * A * o.Ninv) / den, rhs);
}

void c35(const SuiteContext& c, Checker& ck) { check_Lambda(c.tds, *c.ops, ck); }

void c36(const SuiteContext& c, Checker& ck) {
  const auto& o = *c.ops;
  const Scalar& q = q_of(c);
  const Scalar qi = q.inverse();
  const Matrix& A = c.tds.a();
  const Scalar den = q * q - pow(q, -2);
  ck.equal("A psi = Lambda - qN^{-1} - q^{-1}M^{-1}", A * o.psi, o.Lambda - q * o.Ninv - qi * o.Minv);
  ck.equal("psi A = Lambda - q^{-1}N^{-1} - qM^{-1}", o.psi * A, o.Lambda - qi * o.Ninv - q * o.Minv);
  ck.equal("M^{-1} + (q psi A - q^{-1} A psi)/(q^2-q^{-2}) = Lambda/(q+q^{-1})",
           o.Minv + (q * o.psi * A - qi * A * o.psi) / den, o.Lambda / (q + qi));
  ck.equal("N^{-1} + (q A psi - q^{-1} psi A)/(q^2-q^{-2}) = Lambda/(q+q^{-1})",
           o.Ninv + (q * A * o.psi - qi * o.psi * A) / den, o.Lambda / (q + qi));
}

void c37(const SuiteContext& c, Checker& ck) {
  const auto& o = *c.ops;
  for (const auto& p : qualifying_pairs(o)) pair_conditions(c, p, ck);
  ck.commute("[A, psi - Q^{-1}] = 0", c.tds.a(), o.psi - o.Qinv);
  ck.equal("W psi W^{-1} + Q^{-1} = psi + M^{-1}", o.W * o.psi * o.Winv + o.Qinv, o.psi + o.Minv);
  ck.equal("W^{-1} psi W + Q^{-1} = psi + N^{-1}", o.Winv * o.psi * o.W + o.Qinv, o.psi + o.Ninv);
}

void c38(const SuiteContext& c, Checker& ck) {
  const auto& o = *c.ops;
  const Scalar& q = q_of(c);
  const Scalar& a = a_of(c);
  const Matrix I = id(c.tds.dim());
  ck.equal("(psi - Q^{-1})((q+q^{-1})I - A) = (a+a^{-1})I - Lambda",
           (o.psi - o.Qinv) * ((q + q.inverse()) * I - c.tds.a()), (a + a.inverse()) * I - o.Lambda);
}

void c39(const SuiteContext& c, Checker& ck) {
  const auto& o = *c.ops;
  const Scalar& q = q_of(c);
  const Scalar& a = a_of(c);
  const Scalar qi = q.inverse();
  const Scalar qq = q - qi;
  const Matrix I = id(c.tds.dim());
  const Matrix wkw = o.Winv * o.K * o.W;
  const Matrix wkiw = o.W * o.Kinv * o.Winv;
  const Matrix wbw = o.Winv * o.B * o.W;
  const Matrix wbiw = o.W * o.Binv * o.Winv;
  ck.equal("aW^{-1}KW - qI = K(aI - qWK^{-1}W^{-1})", a * wkw - q * I, o.K * (a * I - q * wkiw));
  ck.equal("aW^{-1}KW - q^{-1}I = (aI - q^{-1}WK^{-1}W^{-1})K", a * wkw - qi * I, (a * I - qi * wkiw) * o.K);
  ck.equal("(qW^{-1}KWK^{-1} - q^{-1}K^{-1}W^{-1}KW)/(q-q^{-1}) = I",
           (q * wkw * o.Kinv - qi * o.Kinv * wkw) / qq, I);
  ck.equal("(qKWK^{-1}W^{-1} - q^{-1}WK^{-1}W^{-1}K)/(q-q^{-1}) = I",
           (q * o.K * wkiw - qi * wkiw * o.K) / qq, I);
  ck.equal("aI - qW^{-1}BW = (aWB^{-1}W^{-1} - qI)B", a * I - q * wbw, (a * wbiw - q * I) * o.B);
  ck.equal("aI - q^{-1}W^{-1}BW = B(aWB^{-1}W^{-1} - q^{-1}I)", a * I - qi * wbw, o.B * (a * wbiw - qi * I));
  ck.equal("(qW^{-1}BWB^{-1} - q^{-1}B^{-1}W^{-1}BW)/(q-q^{-1}) = I",
           (q * wbw * o.Binv - qi * o.Binv * wbw) / qq, I);
  ck.equal("(qBWB^{-1}W^{-1} - q^{-1}WB^{-1}W^{-1}B)/(q-q^{-1}) = I",
           (q * o.B * wbiw - qi * wbiw * o.B) / qq, I);
}

void c40(const SuiteContext& c, Checker& ck) { check_R(c.tds, *c.ops, ck); }

std::function<void(const SuiteContext&, Checker&)> lscript(LscriptRelation r) {
  return [r](const SuiteContext& c, Checker& ck) { check_lscript(c.tds, *c.ops, r, ck); };
}

std::vector<IdentityCheck> build_catalog() {
  std::vector<IdentityCheck> v = {
      {"C1", "Def. 2.2, Eq. defEi: E_iE_j = delta_ij E_i, sum E_i = I, A = sum theta_i E_i, standard orderings", false, false, c1},
      {"C2", "Lemmas 2.2, 2.3: \"a q^{d-2i+1}\", Eq. 2factors", false, false, c2},
      {"C3", "Lemma 3.1, Eqs. DG1/DG2: \"called the q-Dolan/Grady relations\"", false, false, c3},
      {"C4", "Prop. 3.3 \"satisfies the equivalent conditions\"; Prop. 3.4 \"Y + (qXA - q^{-1}AX)/(q^2-q^{-2})\", Eqs. CD1/CD2", false, true, c4},
      {"C5", "Lemma 4.2: \"A commutes with X\" iff X = X^vee", false, true, c5},
      {"C6", "Lemma 4.3: \"(AX)^vee = A X^vee\"", false, true, c6},
      {"C7", "Lemma 4.4: \"I - A^2/(q+q^{-1})^2\"", false, true, c7},
      {"C8", "Lemmas 5.2, 5.3: \"t_j/t_i\", Eq. thetat", false, false, c8},
      {"C9", "Lemma 5.6: \"(W^{-1}XW)^vee = X^vee\"", false, true, c9},
      {"C10", "Prop. 5.8: \"I + A/(q+q^{-1})\", Eqs. wxv/wixv", false, true, c10},
      {"C11", "Cor. 5.9: \"W X W^{-1} - W^{-1} X W\"", false, true, c11},
      {"C12", "Cor. 5.10: \"W^{-2} X W^2\", Eqs. WWXWW1/WWXWW2", false, true, c12},
      {"C13", "Prop. 5.11: \"this common value commutes with A\", pairs of Lemma 12.1", false, true, c13},
      {"C14", "Lemmas 5.5, 5.7, 5.12: \"W^{-1} = sum t_i^{-1} E_i\", \"W^down = t_d^{-1} W\"", false, true, c14},
      {"C15", "Lemma 6.1: \"basic Chu/Vandermonde summation formula\", Eqs. cv/cvinv", false, true, c15},
      {"C16", "Props. 6.2, 6.3: \"holds on E_r V + E_{r+1}V\", \"The following holds on V\"", false, true, c16},
      {"C17", "Lemma 6.4, Props. 6.5, 6.6: Eqs. cvVar/cvinvVar and the expansions about theta_s", false, true, c17},
      {"C18", "Def. 7.1: \"U_i is an eigenspace for K with eigenvalue\"; Eqs. s1-s4", false, true, c18},
      {"C19", "Eqs. kA/kAa: \"a K^2 + a^{-1} I\"", false, true, c19},
      {"C20", "Eqs. kb/kba", false, true, c20},
      {"C21", "Lemma 7.2: \"W^{-2} K W^2 = a^{-1} A - a^{-2} K^{-1}\"", false, true, c21},
      {"C22", "Prop. 7.3: \"q W^{-2}K W^2 K^{-1}\", Eqs. wwk/wwkalt/wwb/wwbalt", false, true, c22},
      {"C23", "Prop. 7.4: \"A = a W^{-1} K W + a^{-1} W K^{-1} W^{-1}\"", false, true, c23},
      {"C24", "Cor. 7.5, Eq. Qpre", false, true, c24},
      {"C25", "Eqs. MNdef/KNB: \"K N B = M = B N K\"; Lemma 8.1", false, true, c25},
      {"C26", "Def. 8.2: \"this common value will be denoted by Q\"; Lemmas 8.3, 8.4", false, true, c26},
      {"C27", "Lemma 8.5: \"Q^{-1} acts on the eigenspaces\"", false, true, c27},
      {"C28", "Lemma 9.2, Prop. 9.3: \"W K^{-1} W^{-1}, Q^{-1}, W^{-1} K W\"", false, true, c28},
      {"C29", "Lemma 10.1: \"The following coincide\"", false, true, c29},
      {"C30", "Lemma 10.3: \"K psi = q^2 psi K\"", false, true, c30},
      {"C31", "Lemma 10.4: \"psi^down = psi\"", false, true, c31},
      {"C32", "Lemmas 10.5, 10.6: \"psi U_i in U_{i-1}\"", false, true, c32},
      {"C33", "Lemmas 10.7, 10.8: \"K^{-1}(I - a^{-1} q psi)\"", false, true, c33},
      {"C34", "Prop. 10.9: \"(a+a^{-1})/(q+q^{-1}) I\", Eqs. lam1/lam2", false, true, c34},
      {"C35", "Lemmas 11.1, 11.3, 11.4: \"commutes with each of\"", false, true, c35},
      {"C36", "Lemma 11.5 \"A psi = Lambda - q N^{-1} - q^{-1} M^{-1}\"; Prop. 11.6 \"Lambda/(q+q^{-1})\"", false, true, c36},
      {"C37", "Lemma 12.1, Prop. 12.2: \"commutes with psi - Q^{-1}\"", false, true, c37},
      {"C38", "Prop. 12.3: \"(a+a^{-1})I - Lambda\"", false, true, c38},
      {"C39", "Props. 13.1, 13.3: \"a W^{-1} K W - q I\", \"a I - q W^{-1} B W\"; Cors. 13.2, 13.4", false, true, c39},
      {"C40", "Sec. 19: Eqs. RPRM/RPRM2/RRR, \"R^- R^+ = q^2 R^+ R^-\"", false, true, c40},
  };
  const char suffix[] = {'a', 'b', 'c', 'd', 'e'};
  std::size_t k = 0;
  for (auto r : kLscriptRelations)
    v.push_back({std::string("C41") + suffix[k++], std::string("Problem 19.2: ") + lscript_statement(r), true,
                 true, lscript(r)});
  return v;
}

}  // namespace

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  Matrix y(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) y(r, c) = Scalar(static_cast<long long>(gen() % 7) - 3);
  return y;
}

namespace {

Matrix tridiagonal_part(const TDSystem& tds, const Matrix& y) {
  const auto& e = tds.e();
  Matrix x(y.dim());
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (i <= j + 1 && j <= i + 1) x += e[i] * y * e[j];
  return x;
}

}  // namespace

std::vector<Actor> tridiagonal_actors(const TDSystem& tds, const OperatorSet& ops, std::uint64_t seed) {
  std::vector<Actor> out;
  out.push_back({"random(" + std::to_string(seed) + ")",
                 tridiagonal_part(tds, random_matrix(tds.dim(), seed))});
  out.push_back({"A", tds.a()});
  out.push_back({"A*", tds.astar()});
  out.push_back({"psi", ops.psi});
  out.push_back({"M^{-1}", ops.Minv});
  out.push_back({"N^{-1}", ops.Ninv});
  out.push_back({"Q^{-1}", ops.Qinv});
  out.push_back({"I", id(tds.dim())});
  return out;
}

std::vector<Actor> exhaustive_actors(const TDSystem& tds) {
  const auto& e = tds.e();
  const std::size_t n = tds.dim();
  std::vector<Actor> out;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i > j + 1 || j > i + 1) continue;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          Matrix unit(n);
          unit(r, c) = Scalar(1);
          Matrix x = e[i] * unit * e[j];
          if (x.is_zero()) continue;
          out.push_back({"E_" + std::to_string(i) + " e_" + std::to_string(r) + std::to_string(c) + " E_" +
                             std::to_string(j),
                         std::move(x)});
        }
    }
  return out;
}

const std::vector<IdentityCheck>& catalog() {
  static const std::vector<IdentityCheck> c = build_catalog();
  return c;
}

bool id_matches(const std::string& id, const std::optional<std::string>& filter) {
  if (!filter || filter->empty()) return true;
  return fnmatch(filter->c_str(), id.c_str(), 0) == 0;
}

CheckReport run_catalog(const TDSystem& tds, const OperatorSet* ops, const SuiteOptions& options) {
  SuiteContext ctx{tds, ops, {}, {}};
  if (ops) {
    for (int s = 0; s < options.seeds; ++s) {
      const auto seed = options.seed + static_cast<std::uint64_t>(s);
      auto acts = tridiagonal_actors(tds, *ops, seed);
      if (s == 0) {
        ctx.actors = std::move(acts);
      } else {
        ctx.actors.push_back(std::move(acts.front()));
      }
      ctx.arbitrary.push_back({"raw(" + std::to_string(seed) + ")", random_matrix(tds.dim(), seed)});
    }
    if (options.exhaustive)
      for (auto& a : exhaustive_actors(tds)) ctx.actors.push_back(std::move(a));
  }
  CheckReport r;
  for (const auto& entry : catalog()) {
    if (!id_matches(entry.id, options.filter)) continue;
    Checker ck;
    if (entry.needs_ops && !ops) {
      ck.error("operators", "operators could not be formed");
    } else {
      try {
        entry.evaluator(ctx, ck);
      } catch (const std::exception& e) {
        ck.error("evaluation", e.what());
      }
    }
    r.entries.push_back(ck.finish(entry.id, entry.anchor, entry.probe));
  }
  return r;
}

CheckReport run_suite(const TDSystem& tds, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto build = build_operators(tds);
  CheckReport r;
  for (auto e : build.postconditions.entries) {
    e.id = "post:" + e.id;
    if (id_matches(e.id, options.filter)) r.entries.push_back(std::move(e));
  }
  const OperatorSet* ops = build.ops ? &*build.ops : nullptr;
  auto cat = run_catalog(tds, ops, options);
  for (auto& e : cat.entries) r.entries.push_back(std::move(e));
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace tdq
