#include "tdq/explore.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace tdq {

std::vector<Scalar> minimal_polynomial(const Matrix& x) {
  const std::size_t n = x.dim();
  std::vector<Vector> cols;
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vector flat(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) flat[r * n + c] = p(r, c);
    cols.push_back(flat);
    const std::size_t m = cols.size();
    Matrix sys(std::max(n * n, m));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n * n; ++i) sys(i, j) = cols[j][i];
    const Subspace ker = Subspace::kernel(sys);
    for (const auto& v : ker.basis()) {
      bool tail_zero = true;
      for (std::size_t j = m; j < v.size(); ++j) tail_zero = tail_zero && v[j].is_zero();
      if (!tail_zero || v[m - 1].is_zero()) continue;
      std::vector<Scalar> coeffs;
      for (std::size_t j = 0; j < m; ++j) coeffs.push_back(v[j] / v[m - 1]);
      return coeffs;
    }
    p = p * x;
  }
  return {};
}

namespace {

json poly_json(const std::vector<Scalar>& c) {
  json j = json::array();
  for (const auto& s : c) j.push_back(to_json(s));
  return j;
}

std::string poly_text(const std::vector<Scalar>& c) {
  std::ostringstream os;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    if (k + 1 != c.size()) os << " + ";
    os << "(" << c[k] << ")";
    if (k > 0) os << " X^" << k;
  }
  return os.str();
}

}  // namespace

ExploreResult explore(const TDSystem& tds, const OperatorSet& ops) {
  CheckReport r;
  json data = json::object();
  std::vector<std::string> notes;

  {
    Checker ck;
    check_R(tds, ops, ck);
    auto e = ck.finish("19.1", "Problem 19.1: R^+, R^- (stated relations re-checked; significance open)", true);
    r.entries.push_back(e);
    data["19.1"] = {{"Rplus", to_json(ops.Rplus)}, {"Rminus", to_json(ops.Rminus)}, {"R", to_json(ops.R)}};
  }
  for (auto e : lscript_probes(tds, ops)) {
    e.id = "19.2:" + e.id;
    e.anchor = "Problem 19.2: " + e.anchor;
    r.entries.push_back(std::move(e));
  }
  data["19.2"] = {{"Lscript", to_json(ops.Lscript)}};
  {
    const std::pair<const char*, Matrix> words[] = {
        {"K", ops.K},         {"Q", ops.Q},           {"KQ", ops.K * ops.Q},
        {"QK", ops.Q * ops.K}, {"KQ^{-1}", ops.K * ops.Qinv}, {"K^{-1}Q", ops.Kinv * ops.Q},
        {"KQ-QK", ops.K * ops.Q - ops.Q * ops.K},
    };
    json polys = json::object();
    for (const auto& [name, m] : words) {
      const auto mp = minimal_polynomial(m);
      polys[name] = poly_json(mp);
      notes.push_back(std::string("19.3 minimal polynomial of ") + name + ": " + poly_text(mp));
    }
    data["19.3"] = {{"minimal_polynomials", polys}};
    Checker ck;
    r.entries.push_back(ck.finish("19.3", "Problem 19.3: relation in K^{+-1}, Q^{+-1} (raw data only)", true));
  }
  {
    const Matrix wa = ops.W * tds.astar() * ops.Winv;
    const auto& p = tds.params();
    json d19 = json::object();
    std::vector<Matrix> estar_w;
    for (const auto& e : tds.estar()) estar_w.push_back(ops.W * e * ops.Winv);
    int width = 0, width_back = 0;
    const int d = tds.d();
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j) {
        const auto iu = static_cast<std::size_t>(i);
        const auto ju = static_cast<std::size_t>(j);
        if (!(tds.estar()[iu] * wa * tds.estar()[ju]).is_zero()) width = std::max(width, std::abs(i - j));
        if (!(estar_w[iu] * tds.astar() * estar_w[ju]).is_zero()) width_back = std::max(width_back, std::abs(i - j));
      }
    d19["bandwidth_WAstarWinv_on_Astar_eigenspaces"] = width;
    d19["bandwidth_Astar_on_WAstarWinv_eigenspaces"] = width_back;
    Checker ck;
    try {
      const QRacahParams pp(p.q(), p.b(), p.b(), p.d());
      const auto axioms = verify_td_axioms(tds.astar(), wa, pp);
      for (const auto& e : axioms.entries) {
        d19["axiom_" + e.id] = to_string(e.status);
        if (e.status == Status::Inconclusive) continue;
        ck.holds("axiom (" + e.id + ") for A*, WA*W^{-1}", e.status == Status::Pass, e.witness);
      }
    } catch (const std::exception& e) {
      ck.error("axioms", e.what());
    }
    const auto ordered = [](const std::vector<Matrix>& idem, const std::vector<int>& perm) {
      std::vector<Matrix> out;
      for (int i : perm) out.push_back(idem[static_cast<std::size_t>(i)]);
      return out;
    };
    std::vector<int> perm(static_cast<std::size_t>(d + 1));
    std::iota(perm.begin(), perm.end(), 0);
    int forward = 0, backward = 0;
    do {
      if (acts_tridiagonally(ordered(tds.estar(), perm), wa)) ++forward;
      if (acts_tridiagonally(ordered(estar_w, perm), tds.astar())) ++backward;
    } while (std::next_permutation(perm.begin(), perm.end()));
    d19["orderings_WAstarWinv_tridiagonal"] = forward;
    d19["orderings_Astar_tridiagonal"] = backward;
    ck.holds("some ordering of the A* eigenspaces on which WA*W^{-1} is tridiagonal", forward > 0);
    ck.holds("some ordering of the WA*W^{-1} eigenspaces on which A* is tridiagonal", backward > 0);
    r.entries.push_back(ck.finish("19.4", "Problem 19.4: is A*, WA*W^{-1} a TD pair", true));
    data["19.4"] = d19;
    notes.push_back("19.4 bandwidths: " + std::to_string(width) + ", " + std::to_string(width_back) +
                    "; tridiagonal orderings: " + std::to_string(forward) + ", " + std::to_string(backward));
  }
  return {std::move(r), std::move(data), std::move(notes)};
}

}  // namespace tdq
