#include "macic/io.hpp"

#include <cmath>

#include "macic/region.hpp"

namespace macic::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw SchemaError(std::string("field \"") + what + "\" has the wrong type");
  }
}

std::vector<double> numbers(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string("field \"") + what + "\" must be an array");
  std::vector<double> out;
  for (const auto& x : j) {
    if (!x.is_number()) throw SchemaError(std::string("field \"") + what + "\" must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<Rational> rationals(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string("field \"") + what + "\" must be an array");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

json fraction_array(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_fraction_string(x));
  return a;
}

double to_db(double linear) { return 10.0 * std::log10(linear); }

}  // namespace

json rational_json(const Rational& x) { return {{"fraction", to_fraction_string(x)}, {"decimal", x.get_d()}}; }

Rational rational_from_json(const json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number()) return parse_rational(j.dump());
    if (j.is_object() && j.contains("fraction")) return rational_from_json(j.at("fraction"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  throw SchemaError("expected a rational number, got " + j.dump());
}

gaussian::Channel channel_from_json(const json& j) {
  const int ka = as<int>(field(j, "Ka"), "Ka");
  const int kb = as<int>(field(j, "Kb"), "Kb");
  gaussian::Channel ch = [&] {
    if (j.contains("snr_db")) {
      const json& snr = field(j, "snr_db");
      const json& inr = field(j, "inr_db");
      return gaussian::Channel::from_db(numbers(field(snr, "a"), "snr_db.a"), numbers(field(snr, "b"), "snr_db.b"),
                                        as<double>(field(inr, "a0_to_b"), "inr_db.a0_to_b"),
                                        as<double>(field(inr, "b0_to_a"), "inr_db.b0_to_a"));
    }
    const json& g = field(j, "gain");
    const json& p = field(j, "power");
    const json& x = field(j, "cross_gain");
    return gaussian::Channel::from_gains(numbers(field(g, "a"), "gain.a"), numbers(field(g, "b"), "gain.b"),
                                         numbers(field(p, "a"), "power.a"), numbers(field(p, "b"), "power.b"),
                                         as<double>(field(x, "a0_to_b"), "cross_gain.a0_to_b"),
                                         as<double>(field(x, "b0_to_a"), "cross_gain.b0_to_a"));
  }();
  if (ch.users(Cell::a) != ka || ch.users(Cell::b) != kb) throw SchemaError("Ka/Kb disagree with the SNR lists");
  return ch;
}

json channel_to_json(const gaussian::Channel& ch) {
  json j;
  j["Ka"] = ch.users(Cell::a);
  j["Kb"] = ch.users(Cell::b);
  for (Cell c : kCells) {
    json a = json::array();
    for (int u = 0; u < ch.users(c); ++u) a.push_back(to_db(ch.snr(c, u)));
    j["snr_db"][std::string(1, name(c))] = a;
  }
  j["inr_db"] = {{"a0_to_b", to_db(ch.inr_from(Cell::a))}, {"b0_to_a", to_db(ch.inr_from(Cell::b))}};
  return j;
}

json inequality_to_json(const LinearInequality& q) {
  return {{"coeffs", fraction_array(q.coeffs)}, {"rhs", to_fraction_string(q.rhs)}, {"rhs_decimal", q.rhs.get_d()},
          {"label", q.label}};
}

json polytope_to_json(const Polytope& p) {
  json rows = json::array();
  for (const auto& q : p.inequalities) rows.push_back(inequality_to_json(q));
  return {{"dim", p.dim}, {"nonneg", p.nonneg}, {"coordinates", p.coordinate_names}, {"inequalities", rows}};
}

namespace {

std::vector<LinearInequality> rows_from_json(const json& j, std::size_t dim) {
  std::vector<LinearInequality> out;
  const json& rows = field(j, "inequalities");
  if (!rows.is_array()) throw SchemaError("\"inequalities\" must be an array");
  for (const auto& r : rows) {
    LinearInequality q{rationals(field(r, "coeffs"), "coeffs"), rational_from_json(field(r, "rhs")),
                       r.value("label", std::string{})};
    if (q.coeffs.size() != dim) throw SchemaError("inequality has the wrong number of coefficients");
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

Polytope polytope_from_json(const json& j) {
  Polytope p(as<std::size_t>(field(j, "dim"), "dim"), j.value("nonneg", true));
  if (j.contains("coordinates")) p.coordinate_names = as<std::vector<std::string>>(j.at("coordinates"), "coordinates");
  for (auto& q : rows_from_json(j, p.dim)) p.add(std::move(q));
  return p;
}

json system_to_json(const fme::LinearSystem& s) {
  json rows = json::array();
  for (const auto& q : s.inequalities) rows.push_back(inequality_to_json(q));
  return {{"variables", s.var_names}, {"nonneg", s.nonneg}, {"inequalities", rows}};
}

fme::LinearSystem system_from_json(const json& j) {
  fme::LinearSystem s;
  s.var_names = as<std::vector<std::string>>(field(j, "variables"), "variables");
  s.nonneg = j.value("nonneg", false);
  s.inequalities = rows_from_json(j, s.var_names.size());
  return s;
}

namespace {

template <class T, class F>
json table_json(const BasicSetFunctionTable<T>& t, F&& value) {
  json j;
  j["Ka"] = t.users(Cell::a);
  j["Kb"] = t.users(Cell::b);
  for (SetFn f : kSetFns) {
    json entries = json::object();
    for (Cell c : kCells) {
      for (const auto& m : enum_subsets(t.users(c), domain(f), c)) {
        if (t.has(f, c, m.bits)) entries[m.to_string()] = value(t.get(f, c, m.bits));
      }
    }
    j[std::string(1, name(f))] = entries;
  }
  return j;
}

}  // namespace

json table_to_json(const SetFunctionTable& t) {
  return table_json(t, [](const Rational& x) { return to_fraction_string(x); });
}

json table_to_json(const RealSetFunctionTable& t) {
  return table_json(t, [](double x) { return x; });
}

SetFunctionTable table_from_json(const json& j) {
  SetFunctionTable t(as<int>(field(j, "Ka"), "Ka"), as<int>(field(j, "Kb"), "Kb"));
  for (SetFn f : kSetFns) {
    const json& entries = field(j, std::string(1, name(f)).c_str());
    for (Cell c : kCells) {
      for (const auto& m : enum_subsets(t.users(c), domain(f), c)) {
        const std::string key = m.to_string();
        if (!entries.contains(key)) throw SchemaError(std::string("table entry ") + name(f) + key + " is missing");
        t.set(f, c, m.bits, rational_from_json(entries.at(key)));
      }
    }
  }
  return t;
}

json distribution_to_json(const dm::Distribution& d) {
  json j;
  j["users"] = d.users;
  j["x_size"] = d.x_size;
  j["u_size"] = d.u_size;
  j["p_q"] = fraction_array(d.p_q);
  for (Cell c : kCells) {
    json rows = json::array();
    for (const auto& r : d.p_ux[index(c)]) rows.push_back(fraction_array(r));
    j["p_ux"][std::string(1, name(c))] = rows;
  }
  return j;
}

dm::Distribution distribution_from_json(const json& j) {
  dm::Distribution d;
  d.users = as<std::array<int, 2>>(field(j, "users"), "users");
  d.x_size = as<std::array<int, 2>>(field(j, "x_size"), "x_size");
  d.u_size = as<std::array<int, 2>>(field(j, "u_size"), "u_size");
  d.p_q = rationals(field(j, "p_q"), "p_q");
  for (Cell c : kCells) {
    const json& rows = field(field(j, "p_ux"), std::string(1, name(c)).c_str());
    if (!rows.is_array()) throw SchemaError("p_ux rows must be arrays");
    for (const auto& r : rows) d.p_ux[index(c)].push_back(rationals(r, "p_ux"));
  }
  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  return d;
}

json sd_channel_to_json(const dm::SdChannel& ch) {
  json j;
  j["x_size"] = ch.x_size;
  j["s_size"] = ch.s_size;
  j["modulus"] = ch.modulus;
  for (Cell c : kCells) {
    json rows = json::array();
    for (const auto& r : ch.interference[index(c)]) rows.push_back(fraction_array(r));
    j["interference"][std::string(1, name(c))] = rows;
  }
  return j;
}

dm::SdChannel sd_channel_from_json(const json& j) {
  dm::SdChannel ch;
  ch.x_size = as<std::array<int, 2>>(field(j, "x_size"), "x_size");
  ch.s_size = as<std::array<int, 2>>(field(j, "s_size"), "s_size");
  ch.modulus = as<std::array<int, 2>>(field(j, "modulus"), "modulus");
  for (Cell c : kCells) {
    const json& rows = field(field(j, "interference"), std::string(1, name(c)).c_str());
    if (!rows.is_array()) throw SchemaError("interference rows must be arrays");
    for (const auto& r : rows) ch.interference[index(c)].push_back(rationals(r, "interference"));
  }
  return ch;
}

json allocation_to_json(const det::Allocation& a) {
  json j;
  j["K"] = a.channel.users_per_cell;
  j["q"] = a.channel.q;
  j["n_cross"] = a.channel.n_cross;
  const auto d = a.achieved_gdof();
  for (Cell c : kCells) {
    json users = json::array();
    for (std::size_t u = 0; u < a.levels[index(c)].size(); ++u) {
      users.push_back({{"user", std::string(1, name(c)) + std::to_string(u)},
                       {"levels", a.levels[index(c)][u]},
                       {"gdof", rational_json(d[index(c)][u])}});
    }
    j["cells"][std::string(1, name(c))] = users;
  }
  return j;
}

json gap_report_to_json(const gaussian::GapReport& r) {
  json j;
  for (const auto& f : r.functions) {
    j["functions"][std::string(1, name(f.fn))] = {
        {"min_gap", f.min_gap}, {"max_gap", f.max_gap}, {"worst_mask", f.worst_mask}};
  }
  j["worst_row_excess"] = r.worst_row_excess;
  j["worst_row"] = r.worst_row;
  j["vertex_shift_checked"] = r.vertex_shift_checked;
  j["vertex_shift_ok"] = r.vertex_shift_ok;
  j["outer_vertices"] = r.outer_vertices;
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"kind", x.kind}, {"where", x.where}, {"amount", x.amount}});
  j["violations"] = v;
  j["ok"] = r.ok();
  return j;
}

}  // namespace macic::io
