#include "macic/dmeval.hpp"

#include <algorithm>
#include <stdexcept>

#include "macic/region.hpp"

namespace macic::dm {

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void require_law(const std::vector<Rational>& p, const char* what) {
  Rational s = 0;
  for (const auto& x : p) {
    if (x < 0) throw std::invalid_argument(std::string(what) + ": negative probability");
    s += x;
  }
  if (s != 1) throw std::invalid_argument(std::string(what) + ": probabilities sum to " + to_fraction_string(s));
}

std::string xname(Cell c, int j) { return std::string("X_") + name(c) + std::to_string(j); }
std::string cname(const char* prefix, Cell c) { return std::string(prefix) + name(c); }

// Decodes the per-cell code k into (u, x_0..x_{K-1}).
void decode(int k, int users, int x_size, int& u, std::vector<int>& x) {
  x.assign(static_cast<std::size_t>(users), 0);
  for (int j = users - 1; j >= 0; --j) {
    x[static_cast<std::size_t>(j)] = k % x_size;
    k /= x_size;
  }
  u = k;
}

void check_size(double states) {
  if (states > kMaxJointStates) throw std::length_error("dm evaluation: joint alphabet exceeds 10^6 states");
}

}  // namespace

int Distribution::x_states(Cell c) const { return ipow(x_size[index(c)], users[index(c)]); }

void Distribution::validate() const {
  if (p_q.empty()) throw std::invalid_argument("dm distribution: Q alphabet is empty");
  require_law(p_q, "p(q)");
  for (Cell c : kCells) {
    const int i = index(c);
    if (users[i] < 1 || users[i] > 8 || x_size[i] < 1 || u_size[i] < 1) {
      throw std::invalid_argument("dm distribution: bad alphabet sizes");
    }
    if (p_ux[i].size() != p_q.size()) throw std::invalid_argument("dm distribution: one conditional law per q required");
    for (const auto& row : p_ux[i]) {
      if (row.size() != static_cast<std::size_t>(u_size[i] * x_states(c))) {
        throw std::invalid_argument("dm distribution: conditional law has the wrong length");
      }
      require_law(row, "p(u, x | q)");
    }
  }
}

int SdChannel::output(Cell c, const std::vector<int>& x, int s_other) const {
  int y = s_other;
  for (int v : x) y += v;
  return y % modulus[index(c)];
}

void SdChannel::validate(int users_a, int users_b) const {
  const int users[2] = {users_a, users_b};
  for (Cell c : kCells) {
    const int i = index(c);
    if (x_size[i] < 1 || s_size[i] < 1 || modulus[i] < 1) throw std::invalid_argument("sd channel: bad alphabet sizes");
    if (interference[i].size() != static_cast<std::size_t>(x_size[i])) {
      throw std::invalid_argument("sd channel: one interference law per value of X_i0 required");
    }
    for (const auto& row : interference[i]) {
      if (row.size() != static_cast<std::size_t>(s_size[i])) throw std::invalid_argument("sd channel: interference law has the wrong length");
      require_law(row, "p(s | x0)");
    }
  }
  // Y_c as a function of S_c' must be injective for each fixed x_c.
  for (Cell c : kCells) {
    const int i = index(c);
    const int s_other = s_size[index(other(c))];
    const int states = ipow(x_size[i], users[i]);
    for (int k = 0; k < states; ++k) {
      int u = 0;
      std::vector<int> x;
      decode(k, users[i], x_size[i], u, x);
      std::vector<bool> seen(static_cast<std::size_t>(modulus[i]), false);
      for (int s = 0; s < s_other; ++s) {
        const int y = output(c, x, s);
        if (seen[static_cast<std::size_t>(y)]) {
          throw std::invalid_argument(std::string("sd channel: output of cell ") + name(c) +
                                      " is not invertible in the interference");
        }
        seen[static_cast<std::size_t>(y)] = true;
      }
    }
  }
}

JointPmf inner_joint(const Distribution& d, const SdChannel& ch) {
  d.validate();
  ch.validate(d.users[0], d.users[1]);
  for (Cell c : kCells) {
    if (d.x_size[index(c)] != ch.x_size[index(c)]) throw std::invalid_argument("dm evaluation: input alphabets disagree");
  }
  check_size(static_cast<double>(d.q_size()) * d.u_size[0] * d.x_states(Cell::a) * d.u_size[1] *
             d.x_states(Cell::b) * ch.s_size[0] * ch.s_size[1]);

  std::vector<std::string> names{"Q"};
  std::vector<int> sizes{d.q_size()};
  for (Cell c : kCells) {
    names.push_back(cname("U_", c) + "0");
    sizes.push_back(d.u_size[index(c)]);
    for (int j = 0; j < d.users[index(c)]; ++j) {
      names.push_back(xname(c, j));
      sizes.push_back(d.x_size[index(c)]);
    }
  }
  for (Cell c : kCells) {
    names.push_back(cname("S_", c));
    sizes.push_back(ch.s_size[index(c)]);
  }
  for (Cell c : kCells) {
    names.push_back(cname("Y_", c));
    sizes.push_back(ch.modulus[index(c)]);
  }
  JointPmf pmf(names, sizes);

  const int na = d.u_size[0] * d.x_states(Cell::a);
  const int nb = d.u_size[1] * d.x_states(Cell::b);
  std::vector<int> outcome(names.size());
  int ua = 0, ub = 0;
  std::vector<int> xa, xb;
  for (int q = 0; q < d.q_size(); ++q) {
    for (int ka = 0; ka < na; ++ka) {
      const Rational& pa = d.p_ux[0][static_cast<std::size_t>(q)][static_cast<std::size_t>(ka)];
      if (pa == 0) continue;
      decode(ka, d.users[0], d.x_size[0], ua, xa);
      for (int kb = 0; kb < nb; ++kb) {
        const Rational& pb = d.p_ux[1][static_cast<std::size_t>(q)][static_cast<std::size_t>(kb)];
        if (pb == 0) continue;
        decode(kb, d.users[1], d.x_size[1], ub, xb);
        for (int sa = 0; sa < ch.s_size[0]; ++sa) {
          const Rational& psa = ch.interference[0][static_cast<std::size_t>(xa[0])][static_cast<std::size_t>(sa)];
          if (psa == 0) continue;
          for (int sb = 0; sb < ch.s_size[1]; ++sb) {
            const Rational& psb = ch.interference[1][static_cast<std::size_t>(xb[0])][static_cast<std::size_t>(sb)];
            if (psb == 0) continue;
            std::size_t k = 0;
            outcome[k++] = q;
            outcome[k++] = ua;
            for (int v : xa) outcome[k++] = v;
            outcome[k++] = ub;
            for (int v : xb) outcome[k++] = v;
            outcome[k++] = sa;
            outcome[k++] = sb;
            outcome[k++] = ch.output(Cell::a, xa, sb);
            outcome[k++] = ch.output(Cell::b, xb, sa);
            pmf.add(outcome, d.p_q[static_cast<std::size_t>(q)] * pa * pb * psa * psb);
          }
        }
      }
    }
  }
  return pmf;
}

JointPmf outer_joint(const Distribution& d, const SdChannel& ch) {
  d.validate();
  ch.validate(d.users[0], d.users[1]);
  check_size(static_cast<double>(d.q_size()) * d.x_states(Cell::a) * d.x_states(Cell::b) * ch.s_size[0] *
             ch.s_size[0] * ch.s_size[1] * ch.s_size[1]);

  std::vector<std::string> names{"Q"};
  std::vector<int> sizes{d.q_size()};
  for (Cell c : kCells) {
    for (int j = 0; j < d.users[index(c)]; ++j) {
      names.push_back(xname(c, j));
      sizes.push_back(d.x_size[index(c)]);
    }
  }
  for (const char* p : {"S_", "T_"}) {
    for (Cell c : kCells) {
      names.push_back(cname(p, c));
      sizes.push_back(ch.s_size[index(c)]);
    }
  }
  for (Cell c : kCells) {
    names.push_back(cname("Y_", c));
    sizes.push_back(ch.modulus[index(c)]);
  }
  JointPmf pmf(names, sizes);

  // p(x_c | q) with the auxiliary summed out.
  std::array<std::vector<std::vector<Rational>>, 2> px;
  for (Cell c : kCells) {
    const int i = index(c);
    const int nx = d.x_states(c);
    for (const auto& row : d.p_ux[i]) {
      std::vector<Rational> m(static_cast<std::size_t>(nx), Rational(0));
      for (std::size_t k = 0; k < row.size(); ++k) m[k % static_cast<std::size_t>(nx)] += row[k];
      px[i].push_back(std::move(m));
    }
  }

  std::vector<int> outcome(names.size());
  int dummy = 0;
  std::vector<int> xa, xb;
  const auto& la = ch.interference[0];
  const auto& lb = ch.interference[1];
  for (int q = 0; q < d.q_size(); ++q) {
    for (int ka = 0; ka < d.x_states(Cell::a); ++ka) {
      const Rational& pa = px[0][static_cast<std::size_t>(q)][static_cast<std::size_t>(ka)];
      if (pa == 0) continue;
      decode(ka, d.users[0], d.x_size[0], dummy, xa);
      const auto& sa_law = la[static_cast<std::size_t>(xa[0])];
      for (int kb = 0; kb < d.x_states(Cell::b); ++kb) {
        const Rational& pb = px[1][static_cast<std::size_t>(q)][static_cast<std::size_t>(kb)];
        if (pb == 0) continue;
        decode(kb, d.users[1], d.x_size[1], dummy, xb);
        const auto& sb_law = lb[static_cast<std::size_t>(xb[0])];
        const Rational base = d.p_q[static_cast<std::size_t>(q)] * pa * pb;
        for (int sa = 0; sa < ch.s_size[0]; ++sa) {
          if (sa_law[static_cast<std::size_t>(sa)] == 0) continue;
          for (int sb = 0; sb < ch.s_size[1]; ++sb) {
            if (sb_law[static_cast<std::size_t>(sb)] == 0) continue;
            for (int ta = 0; ta < ch.s_size[0]; ++ta) {
              if (sa_law[static_cast<std::size_t>(ta)] == 0) continue;
              for (int tb = 0; tb < ch.s_size[1]; ++tb) {
                if (sb_law[static_cast<std::size_t>(tb)] == 0) continue;
                std::size_t k = 0;
                outcome[k++] = q;
                for (int v : xa) outcome[k++] = v;
                for (int v : xb) outcome[k++] = v;
                outcome[k++] = sa;
                outcome[k++] = sb;
                outcome[k++] = ta;
                outcome[k++] = tb;
                outcome[k++] = ch.output(Cell::a, xa, sb);
                outcome[k++] = ch.output(Cell::b, xb, sa);
                pmf.add(outcome, base * sa_law[static_cast<std::size_t>(sa)] * sb_law[static_cast<std::size_t>(sb)] *
                                     sa_law[static_cast<std::size_t>(ta)] * sb_law[static_cast<std::size_t>(tb)]);
              }
            }
          }
        }
      }
    }
  }
  return pmf;
}

namespace {

// Input variables of cell c selected by mask.
JointPmf::VarSet inputs(const JointPmf& pmf, Cell c, std::uint32_t mask, int users) {
  JointPmf::VarSet s = 0;
  for (int j = 0; j < users; ++j) {
    if ((mask >> j) & 1U) s |= JointPmf::VarSet{1} << pmf.var(xname(c, j));
  }
  return s;
}

}  // namespace

RealSetFunctionTable dm_inner_table(const JointPmf& pmf, int users_a, int users_b) {
  RealSetFunctionTable t(users_a, users_b);
  const auto q = pmf.set({"Q"});
  for (Cell c : kCells) {
    const Cell o = other(c);
    const int k = t.users(c);
    const std::uint32_t full = (1U << k) - 1;
    const auto y = pmf.set({cname("Y_", c)});
    const auto u_own = pmf.set({cname("U_", c) + "0"});
    const auto u_other = pmf.set({cname("U_", o) + "0"});
    for (const auto& m : enum_subsets(k, SubsetKind::upsilon, c)) {
      const auto x = inputs(pmf, c, m.bits, k);
      const auto rest = inputs(pmf, c, full & ~m.bits, k);
      t.set(SetFn::A, c, m.bits, pmf.mutual_information(x, y, rest | u_own | u_other | q));
      t.set(SetFn::E, c, m.bits, pmf.mutual_information(x | u_other, y, rest | u_own | q));
    }
    for (const auto& m : enum_subsets(k, SubsetKind::omega, c)) {
      const auto x = inputs(pmf, c, m.bits, k);
      const auto rest = inputs(pmf, c, full & ~m.bits, k);
      t.set(SetFn::B, c, m.bits, pmf.mutual_information(x, y, rest | u_other | q));
      t.set(SetFn::G, c, m.bits, pmf.mutual_information(x | u_other, y, rest | q));
    }
  }
  return t;
}

RealSetFunctionTable dm_inner_table(const Distribution& d, const SdChannel& ch) {
  return dm_inner_table(inner_joint(d, ch), d.users[0], d.users[1]);
}

RealSetFunctionTable sd_outer_table(const JointPmf& pmf, int users_a, int users_b) {
  RealSetFunctionTable t(users_a, users_b);
  const auto q = pmf.set({"Q"});
  for (Cell c : kCells) {
    const Cell o = other(c);
    const int k = t.users(c);
    const std::uint32_t full = (1U << k) - 1;
    const auto y = pmf.set({cname("Y_", c)});
    const auto genie = pmf.set({cname("T_", c)});
    const auto x_other0 = inputs(pmf, o, 1U, t.users(o));
    const auto x_other = inputs(pmf, o, (1U << t.users(o)) - 1, t.users(o));
    const double noise = pmf.entropy(pmf.set({cname("S_", o)}), x_other | q);
    for (const auto& m : enum_subsets(k, SubsetKind::upsilon, c)) {
      const auto rest = inputs(pmf, c, full & ~m.bits, k);
      t.set(SetFn::A, c, m.bits, pmf.entropy(y, rest | genie | x_other0 | q) - noise);
      t.set(SetFn::E, c, m.bits, pmf.entropy(y, rest | genie | q) - noise);
    }
    for (const auto& m : enum_subsets(k, SubsetKind::omega, c)) {
      const auto rest = inputs(pmf, c, full & ~m.bits, k);
      t.set(SetFn::B, c, m.bits, pmf.entropy(y, rest | x_other0 | q) - noise);
      t.set(SetFn::G, c, m.bits, pmf.entropy(y, rest | q) - noise);
    }
  }
  return t;
}

RealSetFunctionTable sd_outer_table(const Distribution& d, const SdChannel& ch) {
  return sd_outer_table(outer_joint(d, ch), d.users[0], d.users[1]);
}

Distribution with_genie_auxiliaries(const Distribution& d, const SdChannel& ch) {
  d.validate();
  Distribution g = d;
  for (Cell c : kCells) {
    const int i = index(c);
    const int nx = d.x_states(c);
    g.u_size[i] = ch.s_size[i];
    g.p_ux[i].clear();
    for (const auto& row : d.p_ux[i]) {
      std::vector<Rational> px(static_cast<std::size_t>(nx), Rational(0));
      for (std::size_t k = 0; k < row.size(); ++k) px[k % static_cast<std::size_t>(nx)] += row[k];
      std::vector<Rational> out(static_cast<std::size_t>(g.u_size[i] * nx), Rational(0));
      for (int k = 0; k < nx; ++k) {
        // x_c0 is the most significant input digit.
        const int x0 = k / ipow(d.x_size[i], d.users[i] - 1);
        for (int u = 0; u < g.u_size[i]; ++u) {
          out[static_cast<std::size_t>(u * nx + k)] =
              px[static_cast<std::size_t>(k)] * ch.interference[i][static_cast<std::size_t>(x0)][static_cast<std::size_t>(u)];
        }
      }
      g.p_ux[i].push_back(std::move(out));
    }
  }
  return g;
}

Shift sd_gap_shift(const Distribution& d, const SdChannel& ch) {
  const JointPmf pmf = outer_joint(d, ch);
  Shift s;
  s.on_rates_a = pmf.mutual_information(pmf.set({"X_b0"}), pmf.set({"S_b"}), pmf.set({"T_b"}));
  s.on_rates_b = pmf.mutual_information(pmf.set({"X_a0"}), pmf.set({"S_a"}), pmf.set({"T_a"}));
  return s;
}

ContainmentReport verify_containment(const Distribution& d, const SdChannel& ch, double tolerance, bool clamp) {
  ContainmentReport r;
  const JointPmf outer_pmf = outer_joint(d, ch);
  const RealSetFunctionTable outer = sd_outer_table(outer_pmf, d.users[0], d.users[1]);
  const RealSetFunctionTable inner = dm_inner_table(with_genie_auxiliaries(d, ch), ch);
  r.shift.on_rates_a = outer_pmf.mutual_information(outer_pmf.set({"X_b0"}), outer_pmf.set({"S_b"}), outer_pmf.set({"T_b"}));
  r.shift.on_rates_b = outer_pmf.mutual_information(outer_pmf.set({"X_a0"}), outer_pmf.set({"S_a"}), outer_pmf.set({"T_a"}));

  for (const auto* t : {&inner, &outer}) {
    for (auto& v : chain_rule_violations(*t, 1e-9)) r.table_violations.push_back(v);
    for (auto& v : negativity_violations(*t, 1e-9)) r.table_violations.push_back(v);
  }

  Polytope in = build_generic_region(rationalize(inner));
  // Without clamping, shifted points may leave the orthant; only the rate
  // inequalities are checked then.
  if (!clamp) in.nonneg = false;
  const Polytope out = build_generic_region(rationalize(outer));
  const auto vertices = enumerate_vertices(out);
  r.outer_vertices = vertices.size();
  const Rational tol = dyadic_round(tolerance);
  const Rational shift_a = dyadic_round(r.shift.on_rates_a);
  const Rational shift_b = dyadic_round(r.shift.on_rates_b);
  const std::size_t ka = static_cast<std::size_t>(d.users[0]);
  for (const auto& v : vertices) {
    RatePoint p(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
      p[j] = v[j] - (j < ka ? shift_a : shift_b);
      if (clamp && p[j] < 0) p[j] = 0;
    }
    if (!contains(in, p, tol)) {
      r.contained = false;
      std::string s = "(";
      for (std::size_t j = 0; j < v.size(); ++j) s += (j ? ", " : "") + std::to_string(v[j].get_d());
      r.failures.push_back(s + ")");
    }
  }
  return r;
}

std::vector<TableViolation> inclusion_chain_violations(const Distribution& d, const SdChannel& ch, double tolerance) {
  const JointPmf pmf = inner_joint(d, ch);
  const RealSetFunctionTable t = dm_inner_table(pmf, d.users[0], d.users[1]);
  std::vector<TableViolation> out;
  const auto q = pmf.set({"Q"});
  for (Cell c : kCells) {
    const int k = t.users(c);
    const std::uint32_t full = (1U << k) - 1;
    const auto y = pmf.set({cname("Y_", c)});
    for (const auto& w : enum_subsets(k, SubsetKind::omega, c)) {
      const double bound = pmf.mutual_information(inputs(pmf, c, w.bits, k), y, inputs(pmf, c, full & ~w.bits, k) | q);
      for (const auto& u : enum_subsets(k, SubsetKind::upsilon, c)) {
        const double lhs = t.G(c, w.bits) - t.E(c, u.bits);
        if (lhs > bound + tolerance) {
          out.push_back({"G" + w.to_string() + " - E" + u.to_string() + " > I(X" + w.to_string() + ";Y)", lhs - bound});
        }
      }
    }
  }
  return out;
}

}  // namespace macic::dm
