#include "ore/spec_file.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <set>

#include "ore/ore_text.hpp"

namespace ore {

std::string to_string(TaskKind k) {
  switch (k) {
    case TaskKind::mul: return "mul";
    case TaskKind::divide: return "divide";
    case TaskKind::right_coeffs: return "right-coeffs";
    case TaskKind::axioms: return "axioms";
    case TaskKind::associativity: return "associativity";
    case TaskKind::center: return "center";
    case TaskKind::ideal: return "ideal";
    case TaskKind::delta_simple: return "delta-simple";
    case TaskKind::simplicity: return "simplicity";
    case TaskKind::dynamics_report: return "dynamics-report";
  }
  return "?";
}

const std::vector<OrePoly>& TaskSpec::input(const std::string& key) const {
  for (const auto& [k, v] : inputs) {
    if (k == key) return v;
  }
  throw DomainError("task " + to_string(kind) + " has no input " + key);
}

namespace {

constexpr unsigned kMaxLevel = 5;

bool is_space(char c) { return c == ' ' || c == '\t'; }

// Blank-trimmed view plus the offset of its first character.
std::pair<std::string_view, std::size_t> trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return {s.substr(b, e - b), b};
}

class MapParser {
 public:
  MapParser(const RingDescriptor& r, std::string_view s, std::size_t line, std::size_t column)
      : r_(r), s_(s), line_(line), column_(column) {}

  AdditiveMap parse() {
    AdditiveMap m = map();
    skip();
    if (i_ != s_.size()) fail(i_, "unexpected text after map expression");
    return m;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& msg) const { throw ParseError(line_, column_ + at, msg); }

  void skip() {
    while (i_ < s_.size() && is_space(s_[i_])) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(i_, std::string("expected '") + c + "'");
    ++i_;
  }

  std::string identifier() {
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    return std::string(s_.substr(b, i_ - b));
  }

  std::string digits() {
    std::size_t b = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_) fail(b, "expected a number");
    return std::string(s_.substr(b, i_ - b));
  }

  Scalar scalar() {
    skip();
    const std::size_t at = i_;
    std::string text;
    if (i_ < s_.size() && s_[i_] == '-') {
      text = "-";
      ++i_;
    }
    text += digits();
    mpq_class q;
    if (i_ < s_.size() && s_[i_] == '/') {
      ++i_;
      const std::string den = digits();
      if (mpz_class(den) == 0) fail(at, "zero denominator");
      q = mpq_class(mpz_class(text), mpz_class(den));
      q.canonicalize();
    } else {
      q = mpq_class(mpz_class(text));
    }
    try {
      return Scalar::from_rational(r_.field, q);
    } catch (const Error& e) {
      fail(at, e.what());
    }
  }

  std::size_t index() {
    skip();
    const std::size_t at = i_;
    const std::string d = digits();
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
    if (ec != std::errc() || p != d.data() + d.size()) fail(at, "index out of range");
    return v;
  }

  // Raw text up to the parenthesis closing the current argument list.
  std::string_view balanced() {
    const std::size_t b = i_;
    int depth = 0;
    while (i_ < s_.size()) {
      if (s_[i_] == '(') ++depth;
      if (s_[i_] == ')') {
        if (depth == 0) break;
        --depth;
      }
      ++i_;
    }
    if (i_ == s_.size()) fail(b, "unbalanced parentheses");
    return s_.substr(b, i_ - b);
  }

  template <class F>
  AdditiveMap checked(std::size_t at, F&& build) {
    try {
      return build();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(at, e.what());
    }
  }

  AdditiveMap map() {
    skip();
    const std::size_t at = i_;
    const std::string name = identifier();
    if (name.empty()) fail(at, "expected a map name");
    if (name == "identity") return checked(at, [&] { return AdditiveMap::identity(r_); });
    if (name == "zero") return checked(at, [&] { return AdditiveMap::zero(r_); });
    if (name == "derivative") return checked(at, [&] { return AdditiveMap::derivative(r_); });
    expect('(');
    AdditiveMap out = AdditiveMap::identity(r_);
    if (name == "weighted") {
      std::vector<Scalar> w = {scalar()};
      while (peek(',')) {
        ++i_;
        w.push_back(scalar());
      }
      out = checked(at, [&] { return AdditiveMap::weighted_derivative(r_, w); });
    } else if (name == "scale") {
      const Scalar q = scalar();
      out = checked(at, [&] { return AdditiveMap::scale(r_, q); });
    } else if (name == "pullback") {
      std::vector<std::size_t> g = {index()};
      while (peek(',')) {
        ++i_;
        g.push_back(index());
      }
      out = checked(at, [&] { return AdditiveMap::pullback(r_, g); });
    } else if (name == "kernel") {
      const AdditiveMap alpha = map();
      out = checked(at, [&] { return AdditiveMap::kernel(alpha); });
    } else if (name == "inner") {
      skip();
      const std::size_t start = i_;
      const std::string_view text = balanced();
      const RingElement a = parse_element(r_, text, TextOrigin{line_, column_ + start});
      out = checked(at, [&] { return AdditiveMap::inner(a); });
    } else if (name == "sum") {
      std::vector<std::pair<Scalar, AdditiveMap>> terms;
      do {
        if (!terms.empty()) ++i_;
        const Scalar c = scalar();
        expect('*');
        terms.emplace_back(c, map());
      } while (peek(','));
      out = checked(at, [&] { return AdditiveMap::combination(terms); });
    } else if (name == "compose") {
      std::vector<AdditiveMap> maps = {map()};
      while (peek(',')) {
        ++i_;
        maps.push_back(map());
      }
      out = checked(at, [&] { return AdditiveMap::composition(maps); });
    } else {
      fail(at, "unknown map '" + name + "'");
    }
    expect(')');
    return out;
  }

  const RingDescriptor& r_;
  std::string_view s_;
  std::size_t line_, column_;
  std::size_t i_ = 0;
};

struct Entry {
  std::string key;
  std::string value;
  std::size_t line = 0;
  std::size_t key_column = 0;
  std::size_t value_column = 0;
};

struct Section {
  std::string name;
  std::size_t line = 0;
  std::size_t column = 0;
  std::vector<Entry> entries;
};

// Entries of one section, consumed by key; leftovers are unknown keys.
class Keys {
 public:
  Keys(const Section& s, std::set<std::string> allowed) : s_(s) {
    std::set<std::string> seen;
    for (const auto& e : s.entries) {
      if (!allowed.count(e.key)) {
        throw ParseError(e.line, e.key_column, "unknown key '" + e.key + "' in [" + s.name + "]");
      }
      if (!seen.insert(e.key).second) {
        throw ParseError(e.line, e.key_column, "duplicate key '" + e.key + "' in [" + s.name + "]");
      }
    }
  }

  const Entry* find(const std::string& key) const {
    for (const auto& e : s_.entries) {
      if (e.key == key) return &e;
    }
    return nullptr;
  }
  const Entry& require(const std::string& key) const {
    if (const Entry* e = find(key)) return *e;
    throw ParseError(s_.line, s_.column, "missing key '" + key + "' in [" + s_.name + "]");
  }
  void forbid(const std::string& key, const std::string& why) const {
    if (const Entry* e = find(key)) throw ParseError(e->line, e->key_column, "key '" + key + "' " + why);
  }

 private:
  const Section& s_;
};

unsigned parse_unsigned(const Entry& e) {
  unsigned v = 0;
  const char* b = e.value.data();
  const char* end = b + e.value.size();
  auto [p, ec] = std::from_chars(b, end, v);
  if (ec != std::errc() || p != end) throw ParseError(e.line, e.value_column, "expected a non-negative integer");
  return v;
}

unsigned parse_positive(const Entry& e) {
  const unsigned v = parse_unsigned(e);
  if (v == 0) throw ParseError(e.line, e.value_column, "'" + e.key + "' must be positive");
  return v;
}

std::vector<Section> split_sections(std::string_view text, Section& top) {
  std::vector<Section> out;
  Section* current = &top;
  std::size_t line = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    auto [body, off] = trim(raw);
    if (body.empty() || body.front() == '#') {
      if (nl == text.size()) break;
      continue;
    }
    const std::size_t col = off + 1;
    if (body.front() == '[') {
      if (body.back() != ']') throw ParseError(line, col + body.size() - 1, "expected ']'");
      auto [name, noff] = trim(body.substr(1, body.size() - 2));
      if (name.empty()) throw ParseError(line, col + 1, "empty section name");
      out.push_back(Section{std::string(name), line, col + 1 + noff, {}});
      current = &out.back();
    } else {
      const std::size_t eq = body.find('=');
      if (eq == std::string_view::npos) throw ParseError(line, col, "expected 'key = value'");
      auto [key, koff] = trim(body.substr(0, eq));
      auto [value, voff] = trim(body.substr(eq + 1));
      if (key.empty()) throw ParseError(line, col, "missing key before '='");
      for (std::size_t k = 0; k < key.size(); ++k) {
        const char c = key[k];
        if (!(std::islower(static_cast<unsigned char>(c)) || c == '_' || std::isdigit(static_cast<unsigned char>(c)))) {
          throw ParseError(line, col + koff + k, "invalid character in key");
        }
      }
      const std::size_t vcol = col + eq + 1 + voff;
      if (value.empty()) throw ParseError(line, vcol, "missing value for '" + std::string(key) + "'");
      current->entries.push_back(Entry{std::string(key), std::string(value), line, col + koff, vcol});
    }
    if (nl == text.size()) break;
  }
  return out;
}

Field parse_field(const Section& s) {
  Keys k(s, {"kind", "modulus"});
  const Entry& kind = k.require("kind");
  if (kind.value == "rational") {
    k.forbid("modulus", "only applies to prime fields");
    return Field::rationals();
  }
  if (kind.value != "prime") throw ParseError(kind.line, kind.value_column, "field kind must be 'rational' or 'prime'");
  const Entry& m = k.require("modulus");
  const unsigned p = parse_unsigned(m);
  if (!is_prime(p)) throw ParseError(m.line, m.value_column, "modulus not prime");
  try {
    return Field::prime(p);
  } catch (const Error& e) {
    throw ParseError(m.line, m.value_column, e.what());
  }
}

RingDescriptor parse_ring(const Section& s, Field f) {
  Keys k(s, {"construction", "level", "exponent", "points"});
  const Entry& c = k.require("construction");
  const Entry& lv = k.require("level");
  const unsigned level = parse_unsigned(lv);
  if (level > kMaxLevel) {
    throw ParseError(lv.line, lv.value_column, "level must be at most " + std::to_string(kMaxLevel));
  }
  try {
    if (c.value == "cayley-dickson" || c.value == "poly") {
      k.forbid("exponent", "only applies to quotient rings");
      k.forbid("points", "only applies to function rings");
      return c.value == "poly" ? RingDescriptor::poly(f, level) : RingDescriptor::cayley_dickson(f, level);
    }
    if (c.value == "quotient") {
      k.forbid("points", "only applies to function rings");
      return RingDescriptor::quotient(f, level, parse_positive(k.require("exponent")));
    }
    if (c.value == "functions") {
      k.forbid("exponent", "only applies to quotient rings");
      return RingDescriptor::functions(f, level, parse_positive(k.require("points")));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(c.line, c.value_column, e.what());
  }
  throw ParseError(c.line, c.value_column, "construction must be one of cayley-dickson, poly, quotient, functions");
}

CapProfile parse_caps_section(const Section& s) {
  Keys k(s, {"x", "y", "rounds"});
  return CapProfile{parse_positive(k.require("x")), parse_positive(k.require("y")),
                    parse_positive(k.require("rounds"))};
}

struct TaskShape {
  TaskKind kind;
  std::vector<std::string> keys;
};

const std::vector<TaskShape>& task_shapes() {
  static const std::vector<TaskShape> shapes = {
      {TaskKind::mul, {"left", "right"}},
      {TaskKind::divide, {"dividend", "divisor"}},
      {TaskKind::right_coeffs, {"poly"}},
      {TaskKind::axioms, {}},
      {TaskKind::associativity, {}},
      {TaskKind::center, {}},
      {TaskKind::ideal, {"generators"}},
      {TaskKind::delta_simple, {}},
      {TaskKind::simplicity, {}},
      {TaskKind::dynamics_report, {}},
  };
  return shapes;
}

std::vector<OrePoly> parse_poly_list(const OreHandle& h, const Entry& e) {
  std::vector<OrePoly> out;
  std::size_t b = 0;
  while (true) {
    const std::size_t semi = e.value.find(';', b);
    const std::string_view part = std::string_view(e.value).substr(b, semi == std::string::npos ? std::string::npos : semi - b);
    auto [body, off] = trim(part);
    if (body.empty()) throw ParseError(e.line, e.value_column + b, "empty polynomial in list");
    out.push_back(parse_poly(h, body, TextOrigin{e.line, e.value_column + b + off}));
    if (semi == std::string::npos) break;
    b = semi + 1;
  }
  return out;
}

TaskSpec parse_task(const Section& s, const OreHandle& h) {
  std::set<std::string> allowed = {"kind"};
  const Entry* kind = nullptr;
  for (const auto& e : s.entries) {
    if (e.key == "kind") kind = &e;
  }
  if (!kind) throw ParseError(s.line, s.column, "missing key 'kind' in [task]");
  const TaskShape* shape = nullptr;
  for (const auto& t : task_shapes()) {
    if (to_string(t.kind) == kind->value) shape = &t;
  }
  if (!shape) throw ParseError(kind->line, kind->value_column, "unknown task kind '" + kind->value + "'");
  allowed.insert(shape->keys.begin(), shape->keys.end());
  Keys k(s, allowed);
  TaskSpec t;
  t.kind = shape->kind;
  for (const auto& key : shape->keys) {
    const Entry& e = k.require(key);
    std::vector<OrePoly> polys;
    if (key == "generators") {
      polys = parse_poly_list(h, e);
    } else {
      polys.push_back(parse_poly(h, e.value, TextOrigin{e.line, e.value_column}));
    }
    if (key == "divisor" && !is_monic(polys.front())) throw ParseError(e.line, e.value_column, "divisor must be monic");
    t.inputs.emplace_back(key, std::move(polys));
  }
  return t;
}

}  // namespace

AdditiveMap parse_map(const RingDescriptor& r, std::string_view text, std::size_t line, std::size_t column) {
  return MapParser(r, text, line, column).parse();
}

CapProfile parse_caps(std::string_view text) {
  CapProfile caps;
  std::set<std::string> seen;
  std::size_t b = 0;
  while (b <= text.size()) {
    std::size_t comma = text.find(',', b);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view part = text.substr(b, comma - b);
    const std::size_t eq = part.find('=');
    if (eq == std::string_view::npos) throw ParseError(1, b + 1, "expected X=<n>, Y=<m> or rounds=<k>");
    const std::string key(part.substr(0, eq));
    Entry e{key, std::string(part.substr(eq + 1)), 1, b + 1, b + eq + 2};
    const unsigned v = parse_positive(e);
    if (!seen.insert(key).second) throw ParseError(1, b + 1, "duplicate cap '" + key + "'");
    if (key == "X") {
      caps.x = v;
    } else if (key == "Y") {
      caps.y = v;
    } else if (key == "rounds") {
      caps.rounds = v;
    } else {
      throw ParseError(1, b + 1, "unknown cap '" + key + "'");
    }
    if (comma == text.size()) break;
    b = comma + 1;
  }
  if (seen.size() != 3) throw ParseError(1, 1, "caps need X, Y and rounds");
  return caps;
}

RingSpecFile parse_spec(std::string_view text) {
  Section top{"top level", 1, 1, {}};
  const auto sections = split_sections(text, top);
  RingSpecFile out;
  {
    Keys k(top, {"version"});
    const Entry& v = k.require("version");
    out.version = parse_unsigned(v);
    if (out.version != 1) throw ParseError(v.line, v.value_column, "unsupported version " + v.value);
  }
  std::map<std::string, const Section*> single;
  std::vector<const Section*> tasks;
  for (const auto& s : sections) {
    if (s.name == "task") {
      tasks.push_back(&s);
    } else if (s.name == "field" || s.name == "ring" || s.name == "maps" || s.name == "caps") {
      if (single.count(s.name)) throw ParseError(s.line, s.column, "duplicate section [" + s.name + "]");
      single[s.name] = &s;
    } else {
      throw ParseError(s.line, s.column, "unknown section [" + s.name + "]");
    }
  }
  auto need = [&](const std::string& name) -> const Section& {
    auto it = single.find(name);
    if (it == single.end()) throw ParseError(1, 1, "missing section [" + name + "]");
    return *it->second;
  };
  const Field f = parse_field(need("field"));
  out.ring = parse_ring(need("ring"), f);
  const Section& maps = need("maps");
  Keys mk(maps, {"sigma", "delta"});
  const Entry& se = mk.require("sigma");
  const Entry& de = mk.require("delta");
  const AdditiveMap sigma = parse_map(out.ring, se.value, se.line, se.value_column);
  const AdditiveMap delta = parse_map(out.ring, de.value, de.line, de.value_column);
  out.sigma = sigma.to_string();
  out.delta = delta.to_string();
  try {
    out.handle = OreRing::create(sigma, delta);
  } catch (const Error& e) {
    throw ParseError(maps.line, maps.column, e.what());
  }
  out.caps = parse_caps_section(need("caps"));
  for (const Section* t : tasks) out.tasks.push_back(parse_task(*t, out.handle));
  return out;
}

std::string render_spec(const RingSpecFile& s) {
  std::string out = "version = " + std::to_string(s.version) + "\n\n[field]\n";
  if (s.ring.field.is_rational()) {
    out += "kind = rational\n";
  } else {
    out += "kind = prime\nmodulus = " + std::to_string(s.ring.field.characteristic()) + "\n";
  }
  out += "\n[ring]\nconstruction = ";
  switch (s.ring.construction) {
    case Construction::cayley_dickson: out += "cayley-dickson"; break;
    case Construction::poly: out += "poly"; break;
    case Construction::quotient: out += "quotient"; break;
    case Construction::functions: out += "functions"; break;
  }
  out += "\nlevel = " + std::to_string(s.ring.level) + "\n";
  if (s.ring.construction == Construction::quotient) out += "exponent = " + std::to_string(s.ring.modulus_exponent) + "\n";
  if (s.ring.construction == Construction::functions) out += "points = " + std::to_string(s.ring.points) + "\n";
  out += "\n[maps]\nsigma = " + s.sigma + "\ndelta = " + s.delta + "\n";
  out += "\n[caps]\nx = " + std::to_string(s.caps.x) + "\ny = " + std::to_string(s.caps.y) +
         "\nrounds = " + std::to_string(s.caps.rounds) + "\n";
  for (const auto& t : s.tasks) {
    out += "\n[task]\nkind = " + to_string(t.kind) + "\n";
    for (const auto& [key, polys] : t.inputs) {
      out += key + " = ";
      for (std::size_t i = 0; i < polys.size(); ++i) out += (i ? "; " : "") + to_text(polys[i]);
      out += "\n";
    }
  }
  return out;
}

bool operator==(const RingSpecFile& a, const RingSpecFile& b) {
  if (a.version != b.version || !(a.ring == b.ring) || a.sigma != b.sigma || a.delta != b.delta ||
      !(a.caps == b.caps) || a.tasks.size() != b.tasks.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.tasks.size(); ++i) {
    const auto& x = a.tasks[i];
    const auto& y = b.tasks[i];
    if (x.kind != y.kind || x.inputs.size() != y.inputs.size()) return false;
    for (std::size_t k = 0; k < x.inputs.size(); ++k) {
      if (x.inputs[k].first != y.inputs[k].first || x.inputs[k].second.size() != y.inputs[k].second.size()) return false;
      for (std::size_t j = 0; j < x.inputs[k].second.size(); ++j) {
        if (to_text(x.inputs[k].second[j]) != to_text(y.inputs[k].second[j])) return false;
      }
    }
  }
  return true;
}

}  // namespace ore
