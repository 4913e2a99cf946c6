#include "qtriad/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace qtriad {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& reason) {
  throw DocumentError("Schema", path.empty() ? "/" : path, reason);
}

[[noreturn]] void out_of_range(const std::string& path, const std::string& reason) {
  throw DocumentError("IndexOutOfRange", path, reason);
}

void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
}

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(path, "missing field '" + key + "'");
  return *it;
}

void only_fields(const Json& obj, std::initializer_list<const char*> allowed,
                 const std::string& path) {
  for (const auto& [k, v] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) schema(path + "/" + k, "unknown field");
  }
}

std::size_t natural(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) schema(path, "expected a non-negative integer");
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  const auto x = v.get<std::int64_t>();
  if (x < 0) out_of_range(path, "negative index");
  return std::size_t(x);
}

Elem index_in(const Json& v, std::size_t bound, const std::string& path) {
  const std::size_t x = natural(v, path);
  if (x >= bound)
    out_of_range(path, std::to_string(x) + " is not below " + std::to_string(bound));
  return Elem(x);
}

std::vector<Elem> list(const Json& v, std::size_t len, std::size_t bound, const std::string& path) {
  if (!v.is_array()) schema(path, "expected a list");
  if (v.size() != len)
    schema(path, "has " + std::to_string(v.size()) + " entries, expected " + std::to_string(len));
  std::vector<Elem> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = index_in(v[i], bound, path + "/" + std::to_string(i));
  return out;
}

std::vector<Elem> table(const Json& v, std::size_t rows, std::size_t cols, std::size_t bound,
                        const std::string& path) {
  if (!v.is_array()) schema(path, "expected a list of rows");
  if (v.size() != rows)
    schema(path, "has " + std::to_string(v.size()) + " rows, expected " + std::to_string(rows));
  std::vector<Elem> out;
  out.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = path + "/" + std::to_string(i);
    if (!v[i].is_array()) schema(rp, "row is not a list");
    if (v[i].size() != cols)
      schema(rp, "row " + std::to_string(i) + " has " + std::to_string(v[i].size()) +
                     " entries, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) out.push_back(index_in(v[i][j], bound, rp + "/" + std::to_string(j)));
  }
  return out;
}

struct OrderData {
  std::size_t n = 0;
  std::vector<std::uint8_t> leq;
};

struct QuantaleData {
  OrderData order;
  std::vector<Elem> mult;
  std::optional<Elem> unit;
  std::optional<std::vector<Elem>> involution;
};

struct ModuleData {
  QuantaleData q;
  OrderData m;
  Side side = Side::left;
  std::vector<Elem> action;
};

struct TriadData {
  QuantaleData T;
  OrderData L, R;
  std::vector<Elem> tl, rt, lr;
};

struct SolutionData {
  TriadData triad;
  QuantaleData Q;
  std::vector<Elem> qr, lq, rl;
};

struct InvolutionData {
  TriadData triad;
  std::vector<Elem> star_T, star_L;
};

OrderData read_order(const Json& v, const std::string& path) {
  if (!v.is_array()) schema(path, "expected the order as a list of rows");
  OrderData o;
  o.n = v.size();
  if (o.n == 0) schema(path, "a lattice needs at least one element");
  for (std::size_t i = 0; i < o.n; ++i) {
    const std::string rp = path + "/" + std::to_string(i);
    if (!v[i].is_array() || v[i].size() != o.n)
      schema(rp, "row " + std::to_string(i) + " must have " + std::to_string(o.n) + " entries");
    for (std::size_t j = 0; j < o.n; ++j) {
      const auto& e = v[i][j];
      if (!e.is_number_integer() || (e.get<std::int64_t>() != 0 && e.get<std::int64_t>() != 1))
        schema(rp + "/" + std::to_string(j), "order entries are 0 or 1");
      o.leq.push_back(std::uint8_t(e.get<std::int64_t>()));
    }
  }
  return o;
}

OrderData read_lattice(const Json& p, const std::string& path) {
  require_object(p, path);
  only_fields(p, {"order"}, path);
  return read_order(field(p, "order", path), path + "/order");
}

QuantaleData read_quantale(const Json& p, const std::string& path) {
  require_object(p, path);
  only_fields(p, {"order", "mult", "unit", "involution"}, path);
  QuantaleData q;
  q.order = read_order(field(p, "order", path), path + "/order");
  const std::size_t n = q.order.n;
  q.mult = table(field(p, "mult", path), n, n, n, path + "/mult");
  if (p.contains("unit")) q.unit = index_in(p["unit"], n, path + "/unit");
  if (p.contains("involution")) q.involution = list(p["involution"], n, n, path + "/involution");
  return q;
}

ModuleData read_module(const Json& p, const std::string& path) {
  require_object(p, path);
  only_fields(p, {"quantale", "order", "side", "action"}, path);
  ModuleData m;
  m.q = read_quantale(field(p, "quantale", path), path + "/quantale");
  m.m = read_order(field(p, "order", path), path + "/order");
  const auto& side = field(p, "side", path);
  if (side == "left") m.side = Side::left;
  else if (side == "right") m.side = Side::right;
  else schema(path + "/side", "side is \"left\" or \"right\"");
  const std::size_t nq = m.q.order.n, nm = m.m.n;
  m.action = m.side == Side::left ? table(field(p, "action", path), nq, nm, nm, path + "/action")
                                  : table(field(p, "action", path), nm, nq, nm, path + "/action");
  return m;
}

TriadData read_triad(const Json& p, const std::string& path) {
  require_object(p, path);
  only_fields(p, {"T", "L", "R", "tl", "rt", "lr"}, path);
  TriadData t;
  t.T = read_quantale(field(p, "T", path), path + "/T");
  t.L = read_lattice(field(p, "L", path), path + "/L");
  t.R = read_lattice(field(p, "R", path), path + "/R");
  const std::size_t nt = t.T.order.n, nl = t.L.n, nr = t.R.n;
  t.tl = table(field(p, "tl", path), nt, nl, nl, path + "/tl");
  t.rt = table(field(p, "rt", path), nr, nt, nr, path + "/rt");
  t.lr = table(field(p, "lr", path), nl, nr, nt, path + "/lr");
  return t;
}

SolutionData read_solution(const Json& p, const std::string& path) {
  require_object(p, path);
  only_fields(p, {"triad", "Q", "qr", "lq", "rl"}, path);
  SolutionData s;
  s.triad = read_triad(field(p, "triad", path), path + "/triad");
  s.Q = read_quantale(field(p, "Q", path), path + "/Q");
  const std::size_t nq = s.Q.order.n, nl = s.triad.L.n, nr = s.triad.R.n;
  s.qr = table(field(p, "qr", path), nq, nr, nr, path + "/qr");
  s.lq = table(field(p, "lq", path), nl, nq, nl, path + "/lq");
  s.rl = table(field(p, "rl", path), nr, nl, nq, path + "/rl");
  return s;
}

InvolutionData read_involution(const Json& p, const std::string& path) {
  require_object(p, path);
  only_fields(p, {"triad", "star_T", "star_L"}, path);
  InvolutionData i;
  i.triad = read_triad(field(p, "triad", path), path + "/triad");
  const std::size_t nt = i.triad.T.order.n;
  i.star_T = list(field(p, "star_T", path), nt, nt, path + "/star_T");
  i.star_L = list(field(p, "star_L", path), i.triad.L.n, i.triad.R.n, path + "/star_L");
  return i;
}

// Carrier sizes by label name, for checking labels.
std::vector<std::pair<std::string, std::size_t>> carriers(const Document& d) {
  const std::string p = "/payload";
  auto triad_sizes = [](const TriadData& t) {
    return std::vector<std::pair<std::string, std::size_t>>{
        {"T", t.T.order.n}, {"L", t.L.n}, {"R", t.R.n}};
  };
  if (d.kind == "lattice") return {{"S", read_lattice(d.payload, p).n}};
  if (d.kind == "quantale") return {{"Q", read_quantale(d.payload, p).order.n}};
  if (d.kind == "module") {
    auto m = read_module(d.payload, p);
    return {{"Q", m.q.order.n}, {"M", m.m.n}};
  }
  if (d.kind == "triad") return triad_sizes(read_triad(d.payload, p));
  if (d.kind == "solution") {
    auto s = read_solution(d.payload, p);
    auto out = triad_sizes(s.triad);
    out.emplace_back("Q", s.Q.order.n);
    return out;
  }
  if (d.kind == "involution") return triad_sizes(read_involution(d.payload, p).triad);
  schema("/kind", "unknown kind '" + d.kind + "'");
}

void check_labels(const Document& d, const std::vector<std::pair<std::string, std::size_t>>& cs) {
  if (!d.labels.is_object()) schema("/labels", "expected an object of label lists");
  for (const auto& [k, v] : d.labels.items()) {
    const std::string path = "/labels/" + k;
    std::size_t expected = 0;
    bool known = false;
    for (const auto& [name, n] : cs)
      if (name == k) {
        known = true;
        expected = n;
      }
    if (!known) schema(path, "no carrier named '" + k + "' in a " + d.kind + " document");
    if (!v.is_array() || v.size() != expected)
      schema(path, "needs " + std::to_string(expected) + " labels");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_string()) schema(path + "/" + std::to_string(i), "labels are strings");
      if (!seen.insert(v[i].get<std::string>()).second)
        schema(path + "/" + std::to_string(i), "duplicate label");
    }
  }
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void emit(const Json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      out += pad + Json(k).dump() + ": ";
      emit(v, indent + 2, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  } else if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j) flat = flat && v.is_primitive();
    if (flat) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      emit(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else {
    out += j.dump();
  }
}

Json rows(const std::vector<Elem>& flat, std::size_t cols) {
  Json out = Json::array();
  for (std::size_t i = 0; cols && i < flat.size(); i += cols)
    out.push_back(std::vector<Elem>(flat.begin() + std::ptrdiff_t(i),
                                    flat.begin() + std::ptrdiff_t(i + cols)));
  return out;
}

Json order_json(const SupLattice& s) {
  const auto m = s.order_matrix();
  Json out = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < s.size(); ++j) row.push_back(int(m[i * s.size() + j]));
    out.push_back(std::move(row));
  }
  return out;
}

Json quantale_json(const Quantale& q) {
  Json p;
  p["order"] = order_json(*q.carrier);
  p["mult"] = rows(q.mult.table(), q.size());
  if (q.unit) p["unit"] = *q.unit;
  if (q.involution) p["involution"] = *q.involution;
  return p;
}

Json triad_json(const Triad& t) {
  Json p;
  p["T"] = quantale_json(*t.T);
  p["L"] = Json{{"order", order_json(t.lat_L())}};
  p["R"] = Json{{"order", order_json(t.lat_R())}};
  p["tl"] = rows(t.L.action.table(), t.lat_L().size());
  p["rt"] = rows(t.R.action.table(), t.lat_T().size());
  p["lr"] = rows(t.pairing.table(), t.lat_R().size());
  return p;
}

void scope(Violations& into, Violations vs, const std::string& name) {
  for (auto& v : vs) {
    v.tag = v.tag.empty() ? name : name + "." + v.tag;
    into.push_back(std::move(v));
  }
}

LatticePtr build_lattice(const OrderData& o, const std::string& name, Violations& out,
                         const Limits& limits) {
  if (o.n > limits.max_elements)
    throw SearchSpaceExceeded(name + " has " + std::to_string(o.n) + " elements");
  auto v = SupLattice::from_order(o.n, o.leq, limits);
  if (!v) {
    scope(out, v.violations(), name);
    return nullptr;
  }
  return share(std::move(v).value());
}

QuantalePtr build_quantale(const QuantaleData& d, const std::string& name, Violations& out,
                           const Limits& limits) {
  auto carrier = build_lattice(d.order, name, out, limits);
  if (!carrier) return nullptr;
  auto v = validate_quantale(carrier, d.mult, d.unit, d.involution);
  if (!v) {
    scope(out, v.violations(), name);
    return nullptr;
  }
  return std::make_shared<const Quantale>(std::move(v).value());
}

TriadPtr build_triad(const TriadData& d, Violations& out, const Limits& limits) {
  auto T = build_quantale(d.T, "T", out, limits);
  auto L = build_lattice(d.L, "L", out, limits);
  auto R = build_lattice(d.R, "R", out, limits);
  if (!T || !L || !R) return nullptr;
  auto tl = Bimorphism::from_table(T->carrier, L, L, d.tl, limits);
  auto rt = Bimorphism::from_table(R, T->carrier, R, d.rt, limits);
  auto lr = Bimorphism::from_table(L, R, T->carrier, d.lr, limits);
  auto v = validate_triad(T, L, R, std::move(tl), std::move(rt), std::move(lr));
  if (!v) {
    scope(out, v.violations(), "triad");
    return nullptr;
  }
  return std::make_shared<const Triad>(std::move(v).value());
}

}  // namespace

std::string canonical_json(const Json& j) {
  std::string out;
  emit(j, 0, out);
  out += "\n";
  return out;
}

Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte);
    std::string reason = e.what();
    if (auto pos = reason.find("syntax error"); pos != std::string::npos) reason = reason.substr(pos);
    throw DocumentError("Syntax", std::to_string(line) + ":" + std::to_string(col), reason);
  }
  require_object(j, "");
  only_fields(j, {"version", "kind", "labels", "payload"}, "");
  Document d;
  const auto& version = field(j, "version", "");
  if (!version.is_number_integer() || version.get<std::int64_t>() != 1)
    schema("/version", "only version 1 is supported");
  const auto& kind = field(j, "kind", "");
  if (!kind.is_string()) schema("/kind", "expected a string");
  d.kind = kind.get<std::string>();
  d.payload = field(j, "payload", "");
  if (j.contains("labels")) d.labels = j["labels"];
  check_labels(d, carriers(d));
  return d;
}

std::string serialize(const Document& d) {
  Json j;
  j["version"] = d.version;
  j["kind"] = d.kind;
  if (!d.labels.empty()) j["labels"] = d.labels;
  j["payload"] = d.payload;
  return canonical_json(j);
}

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

void write_document(const std::string& path, const Document& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << serialize(d);
}

Document lattice_document(const SupLattice& s) {
  return {1, "lattice", Json::object(), Json{{"order", order_json(s)}}};
}

Document quantale_document(const Quantale& q) {
  return {1, "quantale", Json::object(), quantale_json(q)};
}

Document module_document(const ModuleAction& m) {
  Json p;
  p["quantale"] = quantale_json(*m.quantale);
  p["order"] = order_json(*m.carrier);
  p["side"] = m.side == Side::left ? "left" : "right";
  p["action"] = rows(m.action.table(), m.side == Side::left ? m.carrier->size() : m.quantale->size());
  return {1, "module", Json::object(), p};
}

Document triad_document(const Triad& t) { return {1, "triad", Json::object(), triad_json(t)}; }

Document solution_document(const Triad& t, const Solution& s) {
  Json p;
  p["triad"] = triad_json(t);
  p["Q"] = quantale_json(*s.Q);
  p["qr"] = rows(s.qr.table(), t.lat_R().size());
  p["lq"] = rows(s.lq.table(), s.Q->size());
  p["rl"] = rows(s.rl.table(), t.lat_L().size());
  return {1, "solution", Json::object(), p};
}

Document involution_document(const Triad& t, const TriadInvolution& inv) {
  Json p;
  p["triad"] = triad_json(t);
  p["star_T"] = inv.star_T;
  p["star_L"] = inv.star_L;
  return {1, "involution", Json::object(), p};
}

Loaded load_document(const Document& d, const Limits& limits) {
  Loaded out;
  out.kind = d.kind;
  const std::string p = "/payload";
  if (d.kind == "lattice") {
    out.lattice = build_lattice(read_lattice(d.payload, p), "S", out.violations, limits);
  } else if (d.kind == "quantale") {
    out.quantale = build_quantale(read_quantale(d.payload, p), "Q", out.violations, limits);
  } else if (d.kind == "module") {
    const auto m = read_module(d.payload, p);
    auto Q = build_quantale(m.q, "Q", out.violations, limits);
    auto M = build_lattice(m.m, "M", out.violations, limits);
    if (Q && M) {
      ModuleAction a{Q, M, m.side,
                     m.side == Side::left
                         ? Bimorphism::from_table(Q->carrier, M, M, m.action, limits)
                         : Bimorphism::from_table(M, Q->carrier, M, m.action, limits)};
      auto v = validate_module(a, false);
      if (v.empty()) out.module = std::move(a);
      scope(out.violations, std::move(v), "M");
    }
  } else if (d.kind == "triad") {
    out.triad = build_triad(read_triad(d.payload, p), out.violations, limits);
  } else if (d.kind == "solution") {
    const auto s = read_solution(d.payload, p);
    out.triad = build_triad(s.triad, out.violations, limits);
    auto Q = build_quantale(s.Q, "Q", out.violations, limits);
    if (out.triad && Q) {
      const auto& t = *out.triad;
      Solution sol{Q, Bimorphism::from_table(Q->carrier, t.R.carrier, t.R.carrier, s.qr, limits),
                   Bimorphism::from_table(t.L.carrier, Q->carrier, t.L.carrier, s.lq, limits),
                   Bimorphism::from_table(t.R.carrier, t.L.carrier, Q->carrier, s.rl, limits)};
      auto v = validate_solution(t, sol);
      if (v.empty()) out.solution = std::move(sol);
      scope(out.violations, std::move(v), "solution");
    }
  } else if (d.kind == "involution") {
    const auto i = read_involution(d.payload, p);
    out.triad = build_triad(i.triad, out.violations, limits);
    if (out.triad) {
      TriadInvolution inv;
      try {
        inv = make_triad_involution(*out.triad, i.star_T, i.star_L);
      } catch (const InputError& e) {
        throw DocumentError("Schema", p + "/star_L", e.what());
      }
      auto v = validate_involutive_triad(*out.triad, inv);
      if (v.empty()) out.involution = std::move(inv);
      scope(out.violations, std::move(v), "involution");
    }
  } else {
    schema("/kind", "unknown kind '" + d.kind + "'");
  }
  return out;
}

}  // namespace qtriad
