#include "tdq/qtet.hpp"

#include "tdq/qseries.hpp"

namespace tdq {

namespace {

std::string label(int i, int j) { return std::to_string(((i % 4) + 4) % 4) + std::to_string(((j % 4) + 4) % 4); }

const Matrix& gen(const Generators& g, int i, int j) {
  const auto it = g.find(label(i, j));
  if (it == g.end()) throw QtetError("missing generator x" + label(i, j));
  return it->second;
}

void require_complete(const Generators& g) {
  std::size_t n = 0;
  for (const char* l : kBoxqLabels) {
    const auto it = g.find(l);
    if (it == g.end()) throw QtetError(std::string("missing generator x") + l);
    if (n == 0) n = it->second.dim();
    if (n == 0 || it->second.dim() != n) throw QtetError("generators must be square of one nonzero dimension");
  }
}

Matrix uq_casimir(const Matrix& x, const Matrix& y, const Matrix& z, const Scalar& q) {
  return q * x + q.inverse() * y + q * z - q * x * y * z;
}

}  // namespace

std::array<Matrix, 4> upsilon_expressions(const Generators& g, const Scalar& t, const Scalar& q) {
  const Matrix I = Matrix::identity(gen(g, 0, 1).dim());
  const Scalar ti = t.inverse();
  const Scalar qi = q.inverse();
  const Matrix &x01 = gen(g, 0, 1), &x12 = gen(g, 1, 2), &x23 = gen(g, 2, 3), &x30 = gen(g, 3, 0);
  return {t * (x01 * x23 - I) + q * x30 + qi * x12, ti * (x12 * x30 - I) + q * x01 + qi * x23,
          t * (x23 * x01 - I) + q * x12 + qi * x30, ti * (x30 * x12 - I) + q * x23 + qi * x01};
}

const Matrix& BoxqModule::x(int i, int j) const { return gen(gens, i, j); }

BoxqModule make_module(Generators gens, const Scalar& t, const Scalar& q) {
  require_complete(gens);
  if (t.is_zero()) throw QtetError("t must be nonzero");
  BoxqModule m{t, std::move(gens), Matrix(), {}};
  m.upsilon_forms = upsilon_expressions(m.gens, t, q);
  m.upsilon = m.upsilon_forms[0];
  return m;
}

void equitable_triple_checks(const std::string& lbl, const Matrix& x, const Matrix& y,
                             const Matrix& z, const Scalar& q, Checker& ck) {
  const Matrix I = Matrix::identity(x.dim());
  const Scalar qq = q - q.inverse();
  ck.holds(lbl + ": X invertible", x.invertible());
  ck.holds(lbl + ": Y invertible", y.invertible());
  ck.holds(lbl + ": Z invertible", z.invertible());
  ck.equal(lbl + ": (qXY - q^{-1}YX)/(q-q^{-1}) = I", qcommutator(x, y, q) / qq, I);
  ck.equal(lbl + ": (qYZ - q^{-1}ZY)/(q-q^{-1}) = I", qcommutator(y, z, q) / qq, I);
  ck.equal(lbl + ": (qZX - q^{-1}XZ)/(q-q^{-1}) = I", qcommutator(z, x, q) / qq, I);
}

bool check_equitable_triple(const Matrix& x, const Matrix& y, const Matrix& z, const Scalar& q) {
  Checker ck;
  equitable_triple_checks("triple", x, y, z, q, ck);
  return !ck.failed();
}

UqResult check_uqsl2(const Matrix& x, const Matrix& y, const Matrix& yinv, const Matrix& z,
                     const Scalar& q) {
  require_same_dim(x, y, "check_uqsl2");
  require_same_dim(x, yinv, "check_uqsl2");
  require_same_dim(x, z, "check_uqsl2");
  const Matrix I = Matrix::identity(x.dim());
  const Scalar qi = q.inverse();
  const Scalar qq = q - qi;
  const Scalar q2 = q * q;
  UqResult out;
  auto& entries = out.report.entries;
  {
    Checker ck;
    ck.equal("y y^{-1} = 1", y * yinv, I);
    ck.equal("y^{-1} y = 1", yinv * y, I);
    entries.push_back(ck.finish("inverse", "y y^{-1} = 1 = y^{-1} y"));
  }
  {
    Checker ck;
    ck.equal("(qxy - q^{-1}yx)/(q-q^{-1}) = 1", qcommutator(x, y, q) / qq, I);
    ck.equal("(qyz - q^{-1}zy)/(q-q^{-1}) = 1", qcommutator(y, z, q) / qq, I);
    ck.equal("(qzx - q^{-1}xz)/(q-q^{-1}) = 1", qcommutator(z, x, q) / qq, I);
    entries.push_back(ck.finish("relations", "the three equitable relations"));
  }
  out.casimir = uq_casimir(x, y, z, q);
  {
    Checker ck;
    const Matrix& c = out.casimir;
    ck.equal("= q^{-1}x + qy + q^{-1}z - q^{-1}zyx", c, qi * x + q * y + qi * z - qi * z * y * x);
    ck.equal("= qy + q^{-1}z + qx - qyzx", c, q * y + qi * z + q * x - q * y * z * x);
    ck.equal("= q^{-1}y + qz + q^{-1}x - q^{-1}xzy", c, qi * y + q * z + qi * x - qi * x * z * y);
    ck.equal("= qz + q^{-1}x + qy - qzxy", c, q * z + qi * x + q * y - q * z * x * y);
    ck.equal("= q^{-1}z + qx + q^{-1}y - q^{-1}yxz", c, qi * z + q * x + qi * y - qi * y * x * z);
    ck.commute("[Casimir, x] = 0", c, x);
    ck.commute("[Casimir, y] = 0", c, y);
    ck.commute("[Casimir, z] = 0", c, z);
    entries.push_back(ck.finish("casimir", "six Casimir expressions coincide"));
  }
  const Matrix nux = q * (I - y * z);
  const Matrix nuy = q * (I - z * x);
  const Matrix nuz = q * (I - x * y);
  {
    Checker ck;
    ck.equal("nu_x = q(1-yz) = q^{-1}(1-zy)", nux, qi * (I - z * y));
    ck.equal("nu_y = q(1-zx) = q^{-1}(1-xz)", nuy, qi * (I - x * z));
    ck.equal("nu_z = q(1-xy) = q^{-1}(1-yx)", nuz, qi * (I - y * x));
    ck.equal("[x,y]/(q-q^{-1}) = nu_z", commutator(x, y) / qq, nuz);
    ck.equal("[y,z]/(q-q^{-1}) = nu_x", commutator(y, z) / qq, nux);
    ck.equal("[z,x]/(q-q^{-1}) = nu_y", commutator(z, x) / qq, nuy);
    entries.push_back(ck.finish("nu", "nu_x, nu_y, nu_z and their commutator forms"));
  }
  {
    Checker ck;
    ck.equal("x nu_y = q^2 nu_y x", x * nuy, q2 * nuy * x);
    ck.equal("y nu_z = q^2 nu_z y", y * nuz, q2 * nuz * y);
    ck.equal("z nu_x = q^2 nu_x z", z * nux, q2 * nux * z);
    ck.equal("nu_z x = q^2 x nu_z", nuz * x, q2 * x * nuz);
    ck.equal("nu_x y = q^2 y nu_x", nux * y, q2 * y * nux);
    ck.equal("nu_y z = q^2 z nu_y", nuy * z, q2 * z * nuy);
    entries.push_back(ck.finish("nu-twist", "q^2-twisting of the nu-elements"));
  }
  {
    Checker ck;
    ck.equal("[x,nu_x]/(q-q^{-1}) = y - z", commutator(x, nux) / qq, y - z);
    ck.equal("[y,nu_y]/(q-q^{-1}) = z - x", commutator(y, nuy) / qq, z - x);
    ck.equal("[z,nu_z]/(q-q^{-1}) = x - y", commutator(z, nuz) / qq, x - y);
    ck.equal("[nu_x,nu_y]_q/(q-q^{-1}) = 1 - z^2", qcommutator(nux, nuy, q) / qq, I - z * z);
    ck.equal("[nu_y,nu_z]_q/(q-q^{-1}) = 1 - x^2", qcommutator(nuy, nuz, q) / qq, I - x * x);
    ck.equal("[nu_z,nu_x]_q/(q-q^{-1}) = 1 - y^2", qcommutator(nuz, nux, q) / qq, I - y * y);
    entries.push_back(ck.finish("nu-laws", "commutator and q-commutator laws of the nu-elements"));
  }
  return out;
}

CheckReport check_boxq(const Generators& g, const Scalar& q) {
  require_complete(g);
  const Matrix I = Matrix::identity(gen(g, 0, 1).dim());
  const Scalar qq = q - q.inverse();
  const Scalar q3 = qnumber(3, q);
  CheckReport r;
  for (int i : {0, 1}) {
    Checker ck;
    ck.equal("x" + label(i, i + 2) + " x" + label(i + 2, i) + " = 1", gen(g, i, i + 2) * gen(g, i + 2, i), I);
    ck.equal("x" + label(i + 2, i) + " x" + label(i, i + 2) + " = 1", gen(g, i + 2, i) * gen(g, i, i + 2), I);
    r.entries.push_back(ck.finish("tet1:" + label(i, i + 2) + "-" + label(i + 2, i), "inverse pair"));
  }
  const std::pair<int, int> steps[] = {{1, 1}, {1, 2}, {2, 1}};
  for (const auto& [s1, s2] : steps) {
    for (int i = 0; i < 4; ++i) {
      const int j = i + s1;
      const int k = j + s2;
      const Matrix& u = gen(g, i, j);
      const Matrix& v = gen(g, j, k);
      Checker ck;
      const std::string name = "x" + label(i, j) + " x" + label(j, k);
      ck.equal("(q " + name + " - q^{-1} x" + label(j, k) + " x" + label(i, j) + ")/(q-q^{-1}) = 1",
               qcommutator(u, v, q) / qq, I);
      r.entries.push_back(ck.finish("tet2:" + label(i, j) + "-" + label(j, k), "q-Weyl relation"));
    }
  }
  for (int i = 0; i < 4; ++i) {
    const Matrix& u = gen(g, i, i + 1);
    const Matrix& v = gen(g, i + 2, i + 3);
    const Matrix u2 = u * u;
    const Matrix u3 = u2 * u;
    Checker ck;
    ck.zero("q-Serre x" + label(i, i + 1) + "^3 x" + label(i + 2, i + 3),
            u3 * v - q3 * u2 * v * u + q3 * u * v * u2 - v * u3);
    r.entries.push_back(ck.finish("tet3:" + label(i, i + 1) + "-" + label(i + 2, i + 3), "q-Serre relation"));
  }
  return r;
}

KappaTriple kappa(const Generators& g, int i) {
  return {gen(g, i + 2, i + 3), gen(g, i + 3, i + 1), gen(g, i + 1, i + 3), gen(g, i + 1, i + 2)};
}

SegregatedResult check_segregated(const Generators& g, const Scalar& t, const Scalar& q) {
  require_complete(g);
  if (t.is_zero()) throw QtetError("t must be nonzero");
  const Matrix& x01 = gen(g, 0, 1);
  const Matrix& x12 = gen(g, 1, 2);
  const Matrix& x23 = gen(g, 2, 3);
  const Matrix& x30 = gen(g, 3, 0);
  const Matrix& x02 = gen(g, 0, 2);
  const Matrix& x13 = gen(g, 1, 3);
  const Matrix& x20 = gen(g, 2, 0);
  const Matrix& x31 = gen(g, 3, 1);
  const Matrix I = Matrix::identity(x01.dim());
  const Scalar qi = q.inverse();
  const Scalar qq = q - qi;
  const Scalar ti = t.inverse();
  SegregatedResult out;
  auto& entries = out.report.entries;
  const struct {
    const char* id;
    const char* text;
    Scalar coeff;
    const Matrix* l1;
    const Matrix* l2;
    const Matrix* c1;
    const Matrix* c2;
  } ten[] = {
      {"seg:0123a", "t(x01 - x23) = [x30, x12]/(q-q^{-1})", t, &x01, &x23, &x30, &x12},
      {"seg:0123b", "t^{-1}(x12 - x30) = [x01, x23]/(q-q^{-1})", ti, &x12, &x30, &x01, &x23},
      {"seg:four1a", "t(x01 - x02) = [x30, x02]/(q-q^{-1})", t, &x01, &x02, &x30, &x02},
      {"seg:four1b", "t^{-1}(x12 - x13) = [x01, x13]/(q-q^{-1})", ti, &x12, &x13, &x01, &x13},
      {"seg:four2a", "t(x23 - x20) = [x12, x20]/(q-q^{-1})", t, &x23, &x20, &x12, &x20},
      {"seg:four2b", "t^{-1}(x30 - x31) = [x23, x31]/(q-q^{-1})", ti, &x30, &x31, &x23, &x31},
      {"seg:four3a", "t^{-1}(x30 - x20) = [x20, x01]/(q-q^{-1})", ti, &x30, &x20, &x20, &x01},
      {"seg:four3b", "t(x01 - x31) = [x31, x12]/(q-q^{-1})", t, &x01, &x31, &x31, &x12},
      {"seg:four4a", "t^{-1}(x12 - x02) = [x02, x23]/(q-q^{-1})", ti, &x12, &x02, &x02, &x23},
      {"seg:four4b", "t(x23 - x13) = [x13, x30]/(q-q^{-1})", t, &x23, &x13, &x13, &x30},
  };
  for (const auto& e : ten) {
    Checker ck;
    ck.equal(e.text, e.coeff * (*e.l1 - *e.l2), commutator(*e.c1, *e.c2) / qq);
    entries.push_back(ck.finish(e.id, e.text));
  }

  const auto [u1, u2, u3, u4] = upsilon_expressions(g, t, q);
  out.upsilon = u1;
  {
    Checker ck;
    ck.equal("t(x01x23 - 1) + qx30 + q^{-1}x12 = t^{-1}(x12x30 - 1) + qx01 + q^{-1}x23", u1, u2);
    ck.equal("t(x01x23 - 1) + qx30 + q^{-1}x12 = t(x23x01 - 1) + qx12 + q^{-1}x30", u1, u3);
    ck.equal("t(x01x23 - 1) + qx30 + q^{-1}x12 = t^{-1}(x30x12 - 1) + qx23 + q^{-1}x01", u1, u4);
    for (int i = 0; i < 4; ++i) {
      const auto k = kappa(g, i);
      ck.equal("Upsilon_" + std::to_string(i) + " = Upsilon", uq_casimir(k.x, k.y, k.z, q), u1);
    }
    entries.push_back(ck.finish("upsilon", "Upsilon_i independent of i, four expressions"));
  }
  {
    Checker ck;
    const Scalar qs = q + qi;
    ck.equal("Upsilon = (q+q^{-1})x30 + t((qx01x23 - q^{-1}x23x01)/(q-q^{-1}) - 1)", u1,
             qs * x30 + t * (qcommutator(x01, x23, q) / qq - I));
    ck.equal("Upsilon = (q+q^{-1})x01 + t^{-1}((qx12x30 - q^{-1}x30x12)/(q-q^{-1}) - 1)", u1,
             qs * x01 + ti * (qcommutator(x12, x30, q) / qq - I));
    ck.equal("Upsilon = (q+q^{-1})x12 + t((qx23x01 - q^{-1}x01x23)/(q-q^{-1}) - 1)", u1,
             qs * x12 + t * (qcommutator(x23, x01, q) / qq - I));
    ck.equal("Upsilon = (q+q^{-1})x23 + t^{-1}((qx30x12 - q^{-1}x12x30)/(q-q^{-1}) - 1)", u1,
             qs * x23 + ti * (qcommutator(x30, x12, q) / qq - I));
    entries.push_back(ck.finish("upsilon-alt", "four alternative forms of Upsilon"));
  }
  {
    Checker ck;
    const Scalar s2 = q * q + qi * qi;
    const Scalar c1 = qq * qq;
    const Scalar c2 = qq * (q * q - qi * qi);
    auto aw = [&](const Matrix& u, const Matrix& v) { return u * u * v - s2 * u * v * u + v * u * u; };
    const Matrix ut = I + ti * u1;
    const Matrix uT = I + t * u1;
    ck.equal("AW x01^2 x23", aw(x01, x23), -c1 * ut * x01 + c2 * ti * I);
    ck.equal("AW x23^2 x01", aw(x23, x01), -c1 * ut * x23 + c2 * ti * I);
    ck.equal("AW x12^2 x30", aw(x12, x30), -c1 * uT * x12 + c2 * t * I);
    ck.equal("AW x30^2 x12", aw(x30, x12), -c1 * uT * x30 + c2 * t * I);
    entries.push_back(ck.finish("askey-wilson", "Askey-Wilson relations"));
  }
  {
    Checker ck;
    for (const char* l : kBoxqLabels) ck.commute(std::string("[Upsilon, x") + l + "] = 0", u1, g.at(l));
    entries.push_back(ck.finish("upsilon-central", "Upsilon commutes with every generator"));
  }
  return out;
}

Generators shifted(const Generators& g) {
  Generators out;
  for (const char* l : kBoxqLabels) {
    const int i = l[0] - '0';
    const int j = l[1] - '0';
    out[label(i + 1, j + 1)] = gen(g, i, j);
  }
  return out;
}

CheckReport assumption_report(const Matrix& x, const Matrix& y, const Matrix& yinv,
                              const Matrix& z, const Matrix& w, const Scalar& t, const Scalar& q) {
  CheckReport r;
  const Matrix I = Matrix::identity(x.dim());
  const Scalar qi = q.inverse();
  const Scalar ti = t.inverse();
  {
    Checker ck;
    ck.holds("w invertible", w.invertible());
    ck.equal("tz - q = w(t - qx)", t * z - q * I, w * (t * I - q * x));
    ck.equal("tz - q^{-1} = (t - q^{-1}x)w", t * z - qi * I, (t * I - qi * x) * w);
    r.entries.push_back(ck.finish("twocond", "tz - q = w(t - qx), tz - q^{-1} = (t - q^{-1}x)w"));
  }
  if (!w.invertible()) return r;
  const Matrix wi = w.inverse();
  {
    Checker ck;
    ck.equal("xw = 1 - qtz + qtw", x * w, I - q * t * z + q * t * w);
    ck.equal("wx = 1 - q^{-1}tz + q^{-1}tw", w * x, I - qi * t * z + qi * t * w);
    ck.equal("w^{-1}z = 1 - qt^{-1}x + qt^{-1}w^{-1}", wi * z, I - q * ti * x + q * ti * wi);
    ck.equal("zw^{-1} = 1 - q^{-1}t^{-1}x + q^{-1}t^{-1}w^{-1}", z * wi, I - qi * ti * x + qi * ti * wi);
    r.entries.push_back(ck.finish("xw", "products of w with x and z"));
  }
  {
    Checker ck;
    const Matrix nux = q * (I - y * z);
    const Matrix nuz = q * (I - x * y);
    ck.equal("w nu_z = qw - qy + tzy - twy", w * nuz, q * w - q * y + t * z * y - t * w * y);
    ck.equal("nu_z w = q^{-1}w - q^{-1}y + tyz - tyw", nuz * w, qi * w - qi * y + t * y * z - t * y * w);
    ck.equal("nu_x w^{-1} = qw^{-1} - qy + t^{-1}yx - t^{-1}yw^{-1}", nux * wi,
             q * wi - q * y + ti * y * x - ti * y * wi);
    ck.equal("w^{-1} nu_x = q^{-1}w^{-1} - q^{-1}y + t^{-1}xy - t^{-1}w^{-1}y", wi * nux,
             qi * wi - qi * y + ti * x * y - ti * wi * y);
    r.entries.push_back(ck.finish("nu-w", "nu-elements against w"));
  }
  (void)yinv;
  return r;
}

BoxqModule assemble_from_assumption(const Matrix& x, const Matrix& y, const Matrix& yinv,
                                    const Matrix& z, const Matrix& w, const Scalar& t,
                                    const Scalar& q) {
  if (t.is_zero()) throw QtetError("t must be nonzero");
  const auto uq = check_uqsl2(x, y, yinv, z, q);
  for (const auto& e : uq.report.entries)
    if (e.status == Status::Fail) throw QtetError("U_q(sl2) relations fail: " + e.detail);
  require_same_dim(x, w, "assemble_from_assumption");
  if (!w.invertible()) throw QtetError("w is not invertible");
  const auto pre = assumption_report(x, y, yinv, z, w, t, q);
  if (pre.entries.front().status == Status::Fail)
    throw QtetError("two-sided condition on w fails: " + pre.entries.front().detail);
  const Matrix I = Matrix::identity(x.dim());
  const Matrix nux = q * (I - y * z);
  const Matrix nuz = q * (I - x * y);
  Generators g;
  g["01"] = z;
  g["12"] = x;
  g["23"] = y + t.inverse() * nuz;
  g["30"] = y + t * nux;
  g["02"] = yinv;
  g["13"] = w.inverse();
  g["20"] = y;
  g["31"] = w;
  return make_module(std::move(g), t, q);
}

namespace {

BoxqModule module_from(const OperatorSet& ops, const Matrix& k, const Matrix& kinv, const Scalar& t,
                       const Scalar& q) {
  Generators g;
  g["01"] = ops.Winv * k * ops.W;
  g["12"] = ops.W * kinv * ops.Winv;
  g["23"] = ops.Qinv + ops.W * ops.psi * ops.Winv;
  g["30"] = ops.Qinv + ops.Winv * ops.psi * ops.W;
  g["02"] = ops.Q;
  g["13"] = kinv;
  g["20"] = ops.Qinv;
  g["31"] = k;
  return make_module(std::move(g), t, q);
}

void append(CheckReport& into, const CheckReport& from, const std::string& prefix = "") {
  for (auto e : from.entries) {
    e.id = prefix + e.id;
    into.entries.push_back(std::move(e));
  }
}

bool all_pass(const CheckReport& r) {
  for (const auto& e : r.entries)
    if (e.status != Status::Pass) return false;
  return true;
}

}  // namespace

BoxqModule module_one(const TDSystem& tds, const OperatorSet& ops) {
  return module_from(ops, ops.K, ops.Kinv, tds.params().a(), tds.params().q());
}

BoxqModule module_two(const TDSystem& tds, const OperatorSet& ops) {
  return module_from(ops, ops.B, ops.Binv, tds.params().a().inverse(), tds.params().q());
}

CheckReport module_report(const TDSystem& tds, const OperatorSet& ops, Which which) {
  const Scalar& q = tds.params().q();
  const Scalar& a = tds.params().a();
  const BoxqModule m = which == Which::One ? module_one(tds, ops) : module_two(tds, ops);
  CheckReport r;
  append(r, check_boxq(m.gens, q));
  const auto seg = check_segregated(m.gens, m.t, q);
  append(r, seg.report);
  {
    Checker ck;
    ck.equal("Upsilon = Lambda", seg.upsilon, ops.Lambda);
    for (std::size_t i = 0; i < 4; ++i)
      ck.equal("stored Upsilon form " + std::to_string(i + 1) + " = Lambda", m.upsilon_forms[i], ops.Lambda);
    r.entries.push_back(ck.finish("upsilon=Lambda", "Upsilon = Lambda"));
  }
  {
    Checker ck;
    ck.equal("x23 = psi + M^{-1}", m.x(2, 3), ops.psi + ops.Minv);
    ck.equal("x30 = psi + N^{-1}", m.x(3, 0), ops.psi + ops.Ninv);
    if (which == Which::One)
      ck.equal("A = a x01 + a^{-1} x12", tds.a(), a * m.x(0, 1) + a.inverse() * m.x(1, 2));
    else
      ck.equal("A = a^{-1} x01 + a x12", tds.a(), a.inverse() * m.x(0, 1) + a * m.x(1, 2));
    r.entries.push_back(ck.finish("table", "generator table cross-checks"));
  }
  {
    Checker ck;
    for (int i = 0; i < 4; ++i) {
      const auto k = kappa(m.gens, i);
      const auto uq = check_uqsl2(k.x, k.y, k.yinv, k.z, q);
      ck.holds("kappa_" + std::to_string(i) + " triple satisfies U_q(sl2)", all_pass(uq.report));
      ck.equal("kappa_" + std::to_string(i) + " Casimir = Upsilon", uq.casimir, seg.upsilon);
    }
    r.entries.push_back(ck.finish("kappa", "kappa_i images satisfy U_q(sl2)"));
  }
  {
    Checker ck;
    Generators g = m.gens;
    for (int s = 1; s <= 3; ++s) {
      g = shifted(g);
      ck.holds("shift by " + std::to_string(s) + " satisfies all relations", all_pass(check_boxq(g, q)));
    }
    ck.holds("shift by 4 is the identity", shifted(g) == m.gens);
    r.entries.push_back(ck.finish("shift", "x_ij -> x_{i+1,j+1} preserves the relations"));
  }
  {
    Checker ck;
    const Matrix& x = m.x(1, 2);
    const Matrix& y = m.x(2, 0);
    const Matrix& yinv = m.x(0, 2);
    const Matrix& z = m.x(0, 1);
    const Matrix& w = m.x(3, 1);
    const auto pre = assumption_report(x, y, yinv, z, w, m.t, q);
    for (const auto& e : pre.entries) ck.holds("assumption " + e.id, e.status == Status::Pass);
    try {
      const BoxqModule again = assemble_from_assumption(x, y, yinv, z, w, m.t, q);
      for (const char* l : kBoxqLabels)
        ck.equal(std::string("re-assembled x") + l, again.gens.at(l), m.gens.at(l));
    } catch (const std::exception& e) {
      ck.error("re-assembly", e.what());
    }
    r.entries.push_back(ck.finish("assembly", "re-assembly from the U_q(sl2) data and w"));
  }
  if (which == Which::Two) {
    Checker ck;
    try {
      const TDSystem down = downarrow(tds);
      const OperatorSet dops = raw_operators(down);
      const BoxqModule other = module_one(down, dops);
      for (const char* l : kBoxqLabels)
        ck.equal(std::string("x") + l + " = reversed-system x" + l, m.gens.at(l), other.gens.at(l));
      ck.equal("t = reversed-system t", m.t, other.t);
    } catch (const std::exception& e) {
      ck.error("reversed system", e.what());
    }
    r.entries.push_back(ck.finish("downarrow", "module two = module one of the reversed system"));
  } else {
    Checker ck;
    const auto two = module_two(tds, ops);
    ck.equal("x23 shared with the B-table", m.x(2, 3), two.x(2, 3));
    ck.equal("x30 shared with the B-table", m.x(3, 0), two.x(3, 0));
    r.entries.push_back(ck.finish("shared", "x23, x30 agree between the two tables"));
  }
  return r;
}

}  // namespace tdq
