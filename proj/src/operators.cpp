#include "tdq/operators.hpp"

#include "tdq/qseries.hpp"

namespace tdq {

namespace {

Matrix id(std::size_t n) { return Matrix::identity(n); }

std::string at(const char* what, int i) { return std::string(what) + " i=" + std::to_string(i); }

Matrix from_split(const SplitDecomposition& split, std::span<const Scalar> values) {
  std::vector<Scalar> diag;
  for (std::size_t i = 0; i < split.parts.size(); ++i)
    for (std::size_t k = 0; k < split.parts[i].dim(); ++k) diag.push_back(values[i]);
  const Matrix p = split.basis_matrix();
  return p * Matrix::diagonal(diag) * p.inverse();
}

Subspace part_or_zero(const SplitDecomposition& s, int i, std::size_t n) {
  if (i < 0 || i >= static_cast<int>(s.parts.size())) return Subspace(n);
  return s.parts[static_cast<std::size_t>(i)];
}

/// c * sum_{i=0}^{n} (-1)^i q^{+-i^2} prod_{k<i} (x - theta_{node(k)}) / ((base;base)_i (z;base)_i)
/// with base = q^{+-2}.
template <class T, class Node>
T w_series(const T& x, const T& one, const TDSystem& tds, int n, bool inverse, const Scalar& z,
           const Scalar& c, Node node) {
  const Scalar& q = tds.params().q();
  const Scalar base = inverse ? pow(q, -2) : pow(q, 2);
  T sum = one * Scalar(0);
  T prod = one;
  for (int i = 0; i <= n; ++i) {
    const Scalar sign = i % 2 == 0 ? Scalar(1) : Scalar(-1);
    const Scalar coeff = sign * pow(q, inverse ? -i * i : i * i) /
                         (qpochhammer(base, base, static_cast<unsigned>(i)) *
                          qpochhammer(z, base, static_cast<unsigned>(i)));
    sum = sum + prod * coeff;
    prod = prod * (x - one * tds.theta()[static_cast<std::size_t>(node(i))]);
  }
  return sum * c;
}

}  // namespace

// ---------------------------------------------------------------- construction

std::vector<Scalar> t_scalars(const QRacahParams& p) {
  std::vector<Scalar> t;
  for (int i = 0; i <= p.d(); ++i) {
    const Scalar sign = i % 2 == 0 ? Scalar(1) : Scalar(-1);
    t.push_back(sign * pow(p.a(), i) * pow(p.q(), i * (p.d() - i)));
  }
  return t;
}

std::vector<Scalar> k_eigenvalues(const QRacahParams& p) {
  std::vector<Scalar> v;
  for (int i = 0; i <= p.d(); ++i) v.push_back(pow(p.q(), p.d() - 2 * i));
  return v;
}

Matrix spectral_sum(std::span<const Matrix> es, std::span<const Scalar> values) {
  Matrix m(es.front().dim());
  for (std::size_t i = 0; i < es.size(); ++i) m += values[i] * es[i];
  return m;
}

std::pair<Matrix, Matrix> W_spectral(const TDSystem& tds) {
  const auto t = t_scalars(tds.params());
  std::vector<Scalar> inv;
  for (const auto& x : t) inv.push_back(x.inverse());
  return {spectral_sum(tds.e(), t), spectral_sum(tds.e(), inv)};
}

std::pair<Matrix, Matrix> K_B_maps(const TDSystem& tds) {
  const auto values = k_eigenvalues(tds.params());
  return {from_split(split_decomposition(tds, SplitFlavor::First), values),
          from_split(split_decomposition(tds, SplitFlavor::Second), values)};
}

Matrix vee(const Matrix& x, const TDSystem& tds) {
  require_same_dim(x, tds.a(), "vee");
  Matrix out(x.dim());
  for (const auto& e : tds.e()) out += e * x * e;
  return out;
}

OperatorSet raw_operators(const TDSystem& tds) {
  const auto& p = tds.params();
  const Scalar& q = p.q();
  const Scalar& a = p.a();
  const Scalar& b = p.b();
  const std::size_t n = tds.dim();
  OperatorSet s;
  s.t = t_scalars(p);
  std::tie(s.W, s.Winv) = W_spectral(tds);
  s.split = split_parts(tds, SplitFlavor::First);
  s.split_down = split_parts(tds, SplitFlavor::Second);
  const auto kv = k_eigenvalues(p);
  s.K = from_split(s.split, kv);
  s.B = from_split(s.split_down, kv);
  s.Kinv = s.K.inverse();
  s.Binv = s.B.inverse();
  s.M = (a * s.K - a.inverse() * s.B) / (a - a.inverse());
  s.N = (a.inverse() * s.Kinv - a * s.Binv) / (a.inverse() - a);
  s.Minv = s.M.inverse();
  s.Ninv = s.N.inverse();
  s.Q = s.Winv * s.M * s.W;
  s.Qinv = s.Q.inverse();
  const Matrix bk = s.B * s.Kinv;
  s.psi = (id(n) - bk) * (q * (a * id(n) - a.inverse() * bk)).inverse();
  s.R = tds.a() - a * s.K - a.inverse() * s.Kinv;
  s.Lambda = s.psi * s.R + q.inverse() * s.K + q * s.Kinv;
  s.Rminus = s.W * s.Kinv * s.Winv - s.Kinv;
  s.Rplus = s.Winv * s.K * s.W - s.K;
  s.Lscript = tds.astar() - b.inverse() * (s.Minv + s.psi) - b * (s.Ninv + s.psi);
  return s;
}

namespace {

DownValues down_values(const TDSystem& tds) {
  const TDSystem down = downarrow(tds);
  const OperatorSet d = raw_operators(down);
  return {d.t, d.W, d.K, d.B, d.M, d.N, d.Q, d.psi, d.Lambda};
}

using Group = void (*)(const TDSystem&, const OperatorSet&, Checker&);

struct Postcondition {
  const char* id;
  const char* anchor;
  Group run;
};

void check_t_group(const TDSystem& tds, const OperatorSet&, Checker& ck) {
  check_t_scalars(tds.params(), ck);
}

void check_W_group(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  check_W(tds, ops, ck);
  check_W_down(tds, ops, ck);
}

void check_W_forms_group(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  check_cv_sums(tds, false, ck);
  check_cv_sums(tds, true, ck);
  check_W_expansions(tds, ops, false, false, ck);
  check_W_expansions(tds, ops, true, false, ck);
}

void check_K_B_group(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  check_split_actions(tds, ops, ck);
  check_K_B(tds, ops, ck);
  check_kA(tds, ops, ck);
  check_kb(tds, ops, ck);
}

void check_MNQ_group(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  check_M_N(tds, ops, ck);
  check_Q(tds, ops, ck);
}

void check_psi_group(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  check_psi_expressions(tds, ops, ck);
  check_psi_twist(tds, ops, ck);
  check_psi_down(tds, ops, ck);
  check_psi_lowering(tds, ops, ck);
  check_Minv_Ninv(tds, ops, ck);
}

const Postcondition kPostconditions[] = {
    {"t", "t_i nonzero, t_i/t_{i-1} = -a q^{d-2i+1}", check_t_group},
    {"W", "W = sum t_i E_i, W^{-1} = sum t_i^{-1} E_i", check_W_group},
    {"W-forms", "W^{+-1} as polynomials in A", check_W_forms_group},
    {"K-B", "U_i, U^down_i eigenspaces of K, B", check_K_B_group},
    {"M-N-Q", "Q = W^{-1} M W = W N W^{-1}", check_MNQ_group},
    {"psi", "psi: four coinciding expressions", check_psi_group},
    {"Lambda", "Lambda: four coinciding expressions", check_Lambda},
    {"R", "R = A - aK - a^{-1}K^{-1}, R^-, R^+", check_R},
};

}  // namespace

OperatorBuild build_operators(const TDSystem& tds) {
  OperatorBuild out;
  try {
    OperatorSet ops = raw_operators(tds);
    ops.down = down_values(tds);
    out.ops = std::move(ops);
  } catch (const std::exception& e) {
    Checker ck;
    ck.error("operators", e.what());
    out.postconditions.entries.push_back(ck.finish("construct", "operators can be formed"));
    return out;
  }
  for (const auto& pc : kPostconditions) {
    Checker ck;
    try {
      pc.run(tds, *out.ops, ck);
    } catch (const std::exception& e) {
      ck.error(pc.id, e.what());
    }
    out.postconditions.entries.push_back(ck.finish(pc.id, pc.anchor));
  }
  return out;
}

OperatorSet compute_operators(const TDSystem& tds) {
  OperatorBuild build = build_operators(tds);
  for (const auto& e : build.postconditions.entries) {
    if (e.status == Status::Fail)
      throw OperatorError("operator postcondition " + e.id + " failed: " + e.detail,
                          build.postconditions);
  }
  return std::move(*build.ops);
}

// ---------------------------------------------------------------- checks

void check_spectrum(const std::string& label, const Matrix& x, std::span<const Scalar> values,
                    Checker& ck) {
  Matrix prod = id(x.dim());
  for (const auto& v : values) prod = prod * (x - v * id(x.dim()));
  ck.zero(label + ": prod (X - lambda_i I) = 0", prod);
  const auto projections = lagrange_idempotents(x, values);
  for (std::size_t i = 0; i < projections.size(); ++i)
    ck.holds(label + ": eigenvalue " + values[i].str() + " occurs", !projections[i].is_zero());
}

void check_t_scalars(const QRacahParams& p, Checker& ck) {
  const auto t = t_scalars(p);
  const int d = p.d();
  ck.equal("t_0 = 1", t.front(), Scalar(1));
  ck.equal("t_d = (-1)^d a^d", t.back(), (d % 2 == 0 ? Scalar(1) : Scalar(-1)) * pow(p.a(), d));
  for (int i = 0; i <= d; ++i) ck.holds(at("t_i != 0", i), !t[static_cast<std::size_t>(i)].is_zero());
  for (int i = 1; i <= d; ++i) {
    ck.equal(at("t_i / t_{i-1} = -a q^{d-2i+1}", i),
             t[static_cast<std::size_t>(i)] / t[static_cast<std::size_t>(i - 1)],
             -p.a() * pow(p.q(), d - 2 * i + 1));
  }
}

void check_W(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  const std::size_t n = tds.dim();
  ck.equal("W W^{-1} = I", ops.W * ops.Winv, id(n));
  ck.equal("W = sum t_i E_i", ops.W, spectral_sum(tds.e(), ops.t));
  ck.commute("[W, A] = 0", ops.W, tds.a());
  for (std::size_t i = 0; i < tds.e().size(); ++i) {
    ck.commute("[W, E_" + std::to_string(i) + "] = 0", ops.W, tds.e()[i]);
    ck.commute("[W^{-1}, E_" + std::to_string(i) + "] = 0", ops.Winv, tds.e()[i]);
  }
  ck.commute("[W^2, A] = 0", ops.W * ops.W, tds.a());
}

void check_W_down(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  const int d = tds.d();
  const Scalar& td = ops.t.back();
  for (int i = 0; i <= d; ++i) {
    ck.equal(at("t^down_i = t_{d-i} / t_d", i), ops.down.t[static_cast<std::size_t>(i)],
             ops.t[static_cast<std::size_t>(d - i)] / td);
  }
  ck.equal("W^down = t_d^{-1} W", ops.down.W, td.inverse() * ops.W);
}

void check_cv_sums(const TDSystem& tds, bool variant, Checker& ck) {
  const auto& p = tds.params();
  const Scalar& q = p.q();
  const Scalar& a = p.a();
  const int d = p.d();
  const auto t = t_scalars(p);
  const auto& th = tds.theta();
  const Scalar one(1);
  for (int r = 0; r <= d; ++r) {
    for (int s = r; s <= d; ++s) {
      const auto ru = static_cast<std::size_t>(r);
      const auto su = static_cast<std::size_t>(s);
      const std::string rs = " r=" + std::to_string(r) + " s=" + std::to_string(s);
      if (!variant) {
        const Scalar fwd = w_series(th[su], one, tds, s - r, false, a.inverse() * pow(q, 2 * r + 1 - d),
                                    one, [r](int k) { return r + k; });
        const Scalar bwd = w_series(th[su], one, tds, s - r, true, a * pow(q, d - 2 * r - 1), one,
                                    [r](int k) { return r + k; });
        ck.equal("t_s/t_r sum" + rs, fwd, t[su] / t[ru]);
        ck.equal("t_r/t_s sum" + rs, bwd, t[ru] / t[su]);
      } else {
        const Scalar fwd = w_series(th[ru], one, tds, s - r, false, a * pow(q, d - 2 * s + 1), one,
                                    [s](int k) { return s - k; });
        const Scalar bwd = w_series(th[ru], one, tds, s - r, true, a.inverse() * pow(q, 2 * s - d - 1),
                                    one, [s](int k) { return s - k; });
        ck.equal("t_r/t_s variant sum" + rs, fwd, t[ru] / t[su]);
        ck.equal("t_s/t_r variant sum" + rs, bwd, t[su] / t[ru]);
      }
    }
  }
}

void check_W_expansions(const TDSystem& tds, const OperatorSet& ops, bool variant,
                        bool full_space_only, Checker& ck) {
  const auto& p = tds.params();
  const Scalar& q = p.q();
  const Scalar& a = p.a();
  const int d = p.d();
  const std::size_t n = tds.dim();
  const Matrix& A = tds.a();
  const Matrix one = id(n);
  const Subspace zero(n);
  for (int r = 0; r <= d; ++r) {
    const auto ru = static_cast<std::size_t>(r);
    Matrix w, winv;
    Subspace on(n);
    if (!variant) {
      if (full_space_only && r != 0) continue;
      w = w_series(A, one, tds, d - r, false, a.inverse() * pow(q, 2 * r + 1 - d), ops.t[ru],
                   [r](int k) { return r + k; });
      winv = w_series(A, one, tds, d - r, true, a * pow(q, d - 2 * r - 1), ops.t[ru].inverse(),
                      [r](int k) { return r + k; });
      on = eigenspace_sum(tds.e(), r, d);
    } else {
      if (full_space_only && r != d) continue;
      w = w_series(A, one, tds, r, false, a * pow(q, d - 2 * r + 1), ops.t[ru],
                   [r](int k) { return r - k; });
      winv = w_series(A, one, tds, r, true, a.inverse() * pow(q, 2 * r - d - 1), ops.t[ru].inverse(),
                      [r](int k) { return r - k; });
      on = eigenspace_sum(tds.e(), 0, r);
    }
    const std::string where = variant ? " on E_0V+...+E_sV s=" : " on E_rV+...+E_dV r=";
    if (full_space_only) {
      ck.equal(std::string("W expansion on V") + (variant ? " (about theta_d)" : " (about theta_0)"),
               w, ops.W);
      ck.equal(std::string("W^{-1} expansion on V") + (variant ? " (about theta_d)" : " (about theta_0)"),
               winv, ops.Winv);
    } else {
      ck.maps_into("W expansion" + where + std::to_string(r), w - ops.W, on, zero);
      ck.maps_into("W^{-1} expansion" + where + std::to_string(r), winv - ops.Winv, on, zero);
    }
  }
}

CheckReport W_polynomial_forms(const TDSystem& tds) {
  OperatorSet ops;
  ops.t = t_scalars(tds.params());
  std::tie(ops.W, ops.Winv) = W_spectral(tds);
  CheckReport r;
  const struct {
    const char* id;
    const char* anchor;
    int kind;  // 0 scalar sums, 1 filtration expansions, 2 full-space expansions
    bool variant;
  } items[] = {
      {"cv", "t_s/t_r and t_r/t_s as terminating sums", 0, false},
      {"cvP", "W^{+-1} on E_rV+...+E_dV", 1, false},
      {"cvP-full", "W^{+-1} on V about theta_0", 2, false},
      {"cvVar", "t_r/t_s and t_s/t_r about theta_s", 0, true},
      {"cvPVar", "W^{+-1} on E_0V+...+E_sV", 1, true},
      {"cvPVar-full", "W^{+-1} on V about theta_d", 2, true},
  };
  for (const auto& it : items) {
    Checker ck;
    try {
      if (it.kind == 0)
        check_cv_sums(tds, it.variant, ck);
      else
        check_W_expansions(tds, ops, it.variant, it.kind == 2, ck);
    } catch (const std::exception& e) {
      ck.error(it.id, e.what());
    }
    r.entries.push_back(ck.finish(it.id, it.anchor));
  }
  return r;
}

void check_split_actions(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  check_split_decomposition(tds, ops.split, ck);
  check_split_decomposition(tds, ops.split_down, ck);
}

void check_K_B(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  const auto kv = k_eigenvalues(tds.params());
  const std::size_t n = tds.dim();
  const Subspace zero(n);
  Scalar trace(0);
  for (int i = 0; i <= tds.d(); ++i) {
    const auto iu = static_cast<std::size_t>(i);
    ck.maps_into(at("(K - q^{d-2i} I) U_i = 0", i), ops.K - kv[iu] * id(n), ops.split.parts[iu], zero);
    ck.maps_into(at("(B - q^{d-2i} I) U^down_i = 0", i), ops.B - kv[iu] * id(n),
                 ops.split_down.parts[iu], zero);
    trace += Scalar(static_cast<long long>(ops.split.parts[iu].dim())) * kv[iu];
  }
  ck.equal("trace K = sum dim U_i q^{d-2i}", ops.K.trace(), trace);
  ck.equal("K K^{-1} = I", ops.K * ops.Kinv, id(n));
  ck.equal("B B^{-1} = I", ops.B * ops.Binv, id(n));
  check_spectrum("K", ops.K, kv, ck);
  check_spectrum("B", ops.B, kv, ck);
  ck.equal("K^down = B", ops.down.K, ops.B);
  ck.equal("B^down = K", ops.down.B, ops.K);
}

void check_kA(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  const Scalar& q = tds.params().q();
  const Scalar& a = tds.params().a();
  const Matrix& A = tds.a();
  const Matrix I = id(tds.dim());
  const Scalar qq = q - q.inverse();
  ck.equal("(qKA - q^{-1}AK)/(q-q^{-1}) = aK^2 + a^{-1}I", (q * ops.K * A - q.inverse() * A * ops.K) / qq,
           a * ops.K * ops.K + a.inverse() * I);
  ck.equal("(qBA - q^{-1}AB)/(q-q^{-1}) = a^{-1}B^2 + aI", (q * ops.B * A - q.inverse() * A * ops.B) / qq,
           a.inverse() * ops.B * ops.B + a * I);
  ck.equal("(qAK^{-1} - q^{-1}K^{-1}A)/(q-q^{-1}) = a^{-1}K^{-2} + aI",
           (q * A * ops.Kinv - q.inverse() * ops.Kinv * A) / qq,
           a.inverse() * ops.Kinv * ops.Kinv + a * I);
  ck.equal("(qAB^{-1} - q^{-1}B^{-1}A)/(q-q^{-1}) = aB^{-2} + a^{-1}I",
           (q * A * ops.Binv - q.inverse() * ops.Binv * A) / qq,
           a * ops.Binv * ops.Binv + a.inverse() * I);
}

void check_kb(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  const Scalar& q = tds.params().q();
  const Scalar& a = tds.params().a();
  const Scalar qq = q - q.inverse();
  const Scalar c1 = (a.inverse() * q - a * q.inverse()) / qq;
  const Scalar c2 = (a * q - a.inverse() * q.inverse()) / qq;
  ck.zero("aK^2 - c1 KB - c2 BK + a^{-1}B^2 = 0",
          a * ops.K * ops.K - c1 * ops.K * ops.B - c2 * ops.B * ops.K + a.inverse() * ops.B * ops.B);
  ck.zero("a^{-1}K^{-2} - c1 K^{-1}B^{-1} - c2 B^{-1}K^{-1} + aB^{-2} = 0",
          a.inverse() * ops.Kinv * ops.Kinv - c1 * ops.Kinv * ops.Binv - c2 * ops.Binv * ops.Kinv +
              a * ops.Binv * ops.Binv);
}

void check_W2K(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  const Scalar& a = tds.params().a();
  const Matrix& A = tds.a();
  const Matrix w2 = ops.W * ops.W;
  const Matrix w2inv = ops.Winv * ops.Winv;
  ck.equal("W^{-2}KW^2 = a^{-1}A - a^{-2}K^{-1}", w2inv * ops.K * w2,
           a.inverse() * A - pow(a, -2) * ops.Kinv);
  ck.equal("W^{-2}BW^2 = aA - a^2B^{-1}", w2inv * ops.B * w2, a * A - pow(a, 2) * ops.Binv);
  ck.equal("W^2K^{-1}W^{-2} = aA - a^2K", w2 * ops.Kinv * w2inv, a * A - pow(a, 2) * ops.K);
  ck.equal("W^2B^{-1}W^{-2} = a^{-1}A - a^{-2}B", w2 * ops.Binv * w2inv,
           a.inverse() * A - pow(a, -2) * ops.B);
}

void check_WKB_commutators(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  const Scalar& q = tds.params().q();
  const Matrix I = id(tds.dim());
  const Scalar qq = q - q.inverse();
  const Matrix w2 = ops.W * ops.W;
  const Matrix w2inv = ops.Winv * ops.Winv;
  const Matrix wkw = w2inv * ops.K * w2;
  const Matrix wbw = w2inv * ops.B * w2;
  ck.equal("(qW^{-2}KW^2K^{-1} - q^{-1}K^{-1}W^{-2}KW^2)/(q-q^{-1}) = I",
           (q * wkw * ops.Kinv - q.inverse() * ops.Kinv * wkw) / qq, I);
  ck.equal("(qKW^2K^{-1}W^{-2} - q^{-1}W^2K^{-1}W^{-2}K)/(q-q^{-1}) = I",
           (q * ops.K * w2 * ops.Kinv * w2inv - q.inverse() * w2 * ops.Kinv * w2inv * ops.K) / qq, I);
  ck.equal("(qW^{-2}BW^2B^{-1} - q^{-1}B^{-1}W^{-2}BW^2)/(q-q^{-1}) = I",
           (q * wbw * ops.Binv - q.inverse() * ops.Binv * wbw) / qq, I);
  ck.equal("(qBW^2B^{-1}W^{-2} - q^{-1}W^2B^{-1}W^{-2}B)/(q-q^{-1}) = I",
           (q * ops.B * w2 * ops.Binv * w2inv - q.inverse() * w2 * ops.Binv * w2inv * ops.B) / qq, I);
}

void check_A_from_K(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  const Scalar& a = tds.params().a();
  ck.equal("A = aW^{-1}KW + a^{-1}WK^{-1}W^{-1}", tds.a(),
           a * ops.Winv * ops.K * ops.W + a.inverse() * ops.W * ops.Kinv * ops.Winv);
  ck.equal("A = a^{-1}W^{-1}BW + aWB^{-1}W^{-1}", tds.a(),
           a.inverse() * ops.Winv * ops.B * ops.W + a * ops.W * ops.Binv * ops.Winv);
}

void check_Qpre(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  const Scalar& a = tds.params().a();
  ck.equal("W^{-1}(aK - a^{-1}B)/(a-a^{-1})W = W(a^{-1}K^{-1} - aB^{-1})/(a^{-1}-a)W^{-1}",
           ops.Winv * ((a * ops.K - a.inverse() * ops.B) / (a - a.inverse())) * ops.W,
           ops.W * ((a.inverse() * ops.Kinv - a * ops.Binv) / (a.inverse() - a)) * ops.Winv);
}

void check_M_N(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  const auto kv = k_eigenvalues(tds.params());
  const std::size_t n = tds.dim();
  check_spectrum("M", ops.M, kv, ck);
  check_spectrum("N", ops.N, kv, ck);
  ck.equal("M M^{-1} = I", ops.M * ops.Minv, id(n));
  ck.equal("N N^{-1} = I", ops.N * ops.Ninv, id(n));
  ck.equal("KNB = M", ops.K * ops.N * ops.B, ops.M);
  ck.equal("BNK = M", ops.B * ops.N * ops.K, ops.M);
  ck.equal("M^down = M", ops.down.M, ops.M);
  ck.equal("N^down = N", ops.down.N, ops.N);
  ck.zero("M^{-1} tridiagonal on eigenspaces of A", tridiagonal_violation(tds.e(), ops.Minv));
  ck.zero("N^{-1} tridiagonal on eigenspaces of A", tridiagonal_violation(tds.e(), ops.Ninv));
}

void check_Q(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  const auto kv = k_eigenvalues(tds.params());
  ck.equal("W^{-1}MW = WNW^{-1}", ops.Winv * ops.M * ops.W, ops.W * ops.N * ops.Winv);
  ck.equal("Q = W^{-1}MW", ops.Q, ops.Winv * ops.M * ops.W);
  ck.equal("Q Q^{-1} = I", ops.Q * ops.Qinv, id(tds.dim()));
  check_spectrum("Q", ops.Q, kv, ck);
  ck.equal("Q^down = Q", ops.down.Q, ops.Q);
}

void check_Qinv_tridiagonal(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  ck.zero("Q^{-1} tridiagonal on eigenspaces of A", tridiagonal_violation(tds.e(), ops.Qinv));
}

void check_psi_expressions(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  const Scalar& q = tds.params().q();
  const Scalar& a = tds.params().a();
  const Matrix I = id(tds.dim());
  const Matrix bk = ops.B * ops.Kinv;
  const Matrix kb = ops.K * ops.Binv;
  const Matrix kib = ops.Kinv * ops.B;
  const Matrix bik = ops.Binv * ops.K;
  const Matrix d1 = a * I - a.inverse() * bk;
  const Matrix d2 = a.inverse() * I - a * kb;
  const Matrix d3 = a * I - a.inverse() * kib;
  const Matrix d4 = a.inverse() * I - a * bik;
  ck.holds("aI - a^{-1}BK^{-1} invertible", d1.invertible());
  ck.holds("a^{-1}I - aKB^{-1} invertible", d2.invertible());
  ck.holds("aI - a^{-1}K^{-1}B invertible", d3.invertible());
  ck.holds("a^{-1}I - aB^{-1}K invertible", d4.invertible());
  if (ck.failed()) return;
  const Matrix p1 = (I - bk) * (q * d1).inverse();
  const Matrix p2 = (I - kb) * (q * d2).inverse();
  const Matrix p3 = q * (I - kib) * d3.inverse();
  const Matrix p4 = q * (I - bik) * d4.inverse();
  ck.equal("psi = (I - BK^{-1})/(q(aI - a^{-1}BK^{-1}))", ops.psi, p1);
  ck.equal("(I - BK^{-1})/(q(aI - a^{-1}BK^{-1})) = (I - KB^{-1})/(q(a^{-1}I - aKB^{-1}))", p1, p2);
  ck.equal("(I - BK^{-1})/(q(aI - a^{-1}BK^{-1})) = q(I - K^{-1}B)/(aI - a^{-1}K^{-1}B)", p1, p3);
  ck.equal("(I - BK^{-1})/(q(aI - a^{-1}BK^{-1})) = q(I - B^{-1}K)/(a^{-1}I - aB^{-1}K)", p1, p4);
}

void check_psi_twist(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  const Scalar q2 = pow(tds.params().q(), 2);
  ck.equal("K psi = q^2 psi K", ops.K * ops.psi, q2 * ops.psi * ops.K);
  ck.equal("B psi = q^2 psi B", ops.B * ops.psi, q2 * ops.psi * ops.B);
}

void check_psi_down(const TDSystem&, const OperatorSet& ops, Checker& ck) {
  ck.equal("psi^down = psi", ops.down.psi, ops.psi);
}

void check_psi_lowering(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  const std::size_t n = tds.dim();
  for (int i = 0; i <= tds.d(); ++i) {
    ck.maps_into(at("psi U_i in U_{i-1}", i), ops.psi, ops.split.parts[static_cast<std::size_t>(i)],
                 part_or_zero(ops.split, i - 1, n));
    ck.maps_into(at("psi U^down_i in U^down_{i-1}", i), ops.psi,
                 ops.split_down.parts[static_cast<std::size_t>(i)],
                 part_or_zero(ops.split_down, i - 1, n));
  }
  ck.zero("psi^{d+1} = 0", power(ops.psi, tds.d() + 1));
  ck.zero("psi tridiagonal on eigenspaces of A", tridiagonal_violation(tds.e(), ops.psi));
}

void check_Minv_Ninv(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  const Scalar& q = tds.params().q();
  const Scalar& a = tds.params().a();
  const Matrix I = id(tds.dim());
  const Matrix& p = ops.psi;
  const Scalar ai = a.inverse();
  const Scalar qi = q.inverse();
  ck.equal("M^{-1} = K^{-1}(I - a^{-1}q psi)", ops.Minv, ops.Kinv * (I - ai * q * p));
  ck.equal("M^{-1} = (I - a^{-1}q^{-1} psi)K^{-1}", ops.Minv, (I - ai * qi * p) * ops.Kinv);
  ck.equal("M^{-1} = B^{-1}(I - aq psi)", ops.Minv, ops.Binv * (I - a * q * p));
  ck.equal("M^{-1} = (I - aq^{-1} psi)B^{-1}", ops.Minv, (I - a * qi * p) * ops.Binv);
  ck.equal("N^{-1} = K(I - aq^{-1} psi)", ops.Ninv, ops.K * (I - a * qi * p));
  ck.equal("N^{-1} = (I - aq psi)K", ops.Ninv, (I - a * q * p) * ops.K);
  ck.equal("N^{-1} = B(I - a^{-1}q^{-1} psi)", ops.Ninv, ops.B * (I - ai * qi * p));
  ck.equal("N^{-1} = (I - a^{-1}q psi)B", ops.Ninv, (I - ai * q * p) * ops.B);
}

void check_Lambda(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  const Scalar& q = tds.params().q();
  const Scalar& a = tds.params().a();
  const Matrix& A = tds.a();
  const Scalar qi = q.inverse();
  const Matrix rk = A - a * ops.K - a.inverse() * ops.Kinv;
  const Matrix rb = A - a.inverse() * ops.B - a * ops.Binv;
  const Matrix l1 = ops.psi * rk + qi * ops.K + q * ops.Kinv;
  const Matrix l2 = rk * ops.psi + q * ops.K + qi * ops.Kinv;
  const Matrix l3 = ops.psi * rb + qi * ops.B + q * ops.Binv;
  const Matrix l4 = rb * ops.psi + q * ops.B + qi * ops.Binv;
  ck.equal("Lambda = psi(A - aK - a^{-1}K^{-1}) + q^{-1}K + qK^{-1}", ops.Lambda, l1);
  ck.equal("= (A - aK - a^{-1}K^{-1})psi + qK + q^{-1}K^{-1}", l1, l2);
  ck.equal("= psi(A - a^{-1}B - aB^{-1}) + q^{-1}B + qB^{-1}", l1, l3);
  ck.equal("= (A - a^{-1}B - aB^{-1})psi + qB + q^{-1}B^{-1}", l1, l4);
  const struct {
    const char* name;
    const Matrix* m;
  } others[] = {{"A", &A},      {"W", &ops.W}, {"K", &ops.K}, {"B", &ops.B},
                {"M", &ops.M},  {"N", &ops.N}, {"Q", &ops.Q}, {"psi", &ops.psi}};
  for (const auto& o : others) ck.commute(std::string("[Lambda, ") + o.name + "] = 0", ops.Lambda, *o.m);
  ck.equal("Lambda^down = Lambda", ops.down.Lambda, ops.Lambda);
}

void check_R(const TDSystem& tds, const OperatorSet& ops, Checker& ck) {
  const Scalar& q = tds.params().q();
  const Scalar& a = tds.params().a();
  const std::size_t n = tds.dim();
  const Scalar q2 = q * q;
  const Scalar ai = a.inverse();
  const Scalar qi = q.inverse();
  ck.equal("R = A - aK - a^{-1}K^{-1}", ops.R, tds.a() - a * ops.K - ai * ops.Kinv);
  ck.equal("R^+ = -a^{-1}q K R^-", ops.Rplus, -ai * q * ops.K * ops.Rminus);
  ck.equal("R^+ = -a^{-1}q^{-1} R^- K", ops.Rplus, -ai * qi * ops.Rminus * ops.K);
  ck.equal("R^- = -aq^{-1} K^{-1} R^+", ops.Rminus, -a * qi * ops.Kinv * ops.Rplus);
  ck.equal("R^- = -aq R^+ K^{-1}", ops.Rminus, -a * q * ops.Rplus * ops.Kinv);
  ck.equal("R K = q^2 K R", ops.R * ops.K, q2 * ops.K * ops.R);
  ck.equal("R^- K = q^2 K R^-", ops.Rminus * ops.K, q2 * ops.K * ops.Rminus);
  ck.equal("R^+ K = q^2 K R^+", ops.Rplus * ops.K, q2 * ops.K * ops.Rplus);
  for (int i = 0; i <= tds.d(); ++i) {
    const auto& ui = ops.split.parts[static_cast<std::size_t>(i)];
    const Subspace next = part_or_zero(ops.split, i + 1, n);
    ck.maps_into(at("R U_i in U_{i+1}", i), ops.R, ui, next);
    ck.maps_into(at("R^- U_i in U_{i+1}", i), ops.Rminus, ui, next);
    ck.maps_into(at("R^+ U_i in U_{i+1}", i), ops.Rplus, ui, next);
  }
  ck.equal("R = aR^+ + a^{-1}R^-", ops.R, a * ops.Rplus + ai * ops.Rminus);
  ck.equal("R^- R^+ = q^2 R^+ R^-", ops.Rminus * ops.Rplus, q2 * ops.Rplus * ops.Rminus);
}

const char* lscript_id(LscriptRelation r) {
  switch (r) {
    case LscriptRelation::LK: return "LK";
    case LscriptRelation::LB: return "LB";
    case LscriptRelation::LU: return "LU";
    case LscriptRelation::LUdown: return "LUdown";
    case LscriptRelation::Lpsi: return "Lpsi";
  }
  return "?";
}

const char* lscript_statement(LscriptRelation r) {
  switch (r) {
    case LscriptRelation::LK: return "L K = q^{-2} K L";
    case LscriptRelation::LB: return "L B = q^{-2} B L";
    case LscriptRelation::LU: return "L U_i in U_{i-1}, L U_0 = 0";
    case LscriptRelation::LUdown: return "L U^down_i in U^down_{i-1}, L U^down_0 = 0";
    case LscriptRelation::Lpsi: return "L psi = psi L";
  }
  return "?";
}

void check_lscript(const TDSystem& tds, const OperatorSet& ops, LscriptRelation r, Checker& ck) {
  const Scalar q2i = pow(tds.params().q(), -2);
  const std::size_t n = tds.dim();
  switch (r) {
    case LscriptRelation::LK:
      ck.equal("L K = q^{-2} K L", ops.Lscript * ops.K, q2i * ops.K * ops.Lscript);
      break;
    case LscriptRelation::LB:
      ck.equal("L B = q^{-2} B L", ops.Lscript * ops.B, q2i * ops.B * ops.Lscript);
      break;
    case LscriptRelation::LU:
      for (int i = 0; i <= tds.d(); ++i)
        ck.maps_into(at("L U_i in U_{i-1}", i), ops.Lscript, ops.split.parts[static_cast<std::size_t>(i)],
                     part_or_zero(ops.split, i - 1, n));
      break;
    case LscriptRelation::LUdown:
      for (int i = 0; i <= tds.d(); ++i)
        ck.maps_into(at("L U^down_i in U^down_{i-1}", i), ops.Lscript,
                     ops.split_down.parts[static_cast<std::size_t>(i)],
                     part_or_zero(ops.split_down, i - 1, n));
      break;
    case LscriptRelation::Lpsi:
      ck.commute("L psi = psi L", ops.Lscript, ops.psi);
      break;
  }
}

std::vector<ReportEntry> lscript_probes(const TDSystem& tds, const OperatorSet& ops) {
  std::vector<ReportEntry> out;
  for (auto r : kLscriptRelations) {
    Checker ck;
    check_lscript(tds, ops, r, ck);
    out.push_back(ck.finish(lscript_id(r), lscript_statement(r), true));
  }
  return out;
}

}  // namespace tdq
