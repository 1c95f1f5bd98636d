#include "chenchern/serialize.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chenchern/corpus.hpp"

namespace chenchern::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw FormatError(where + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key, const std::string& where) {
  const Json& a = field(j, key, where);
  if (!a.is_array()) fail(where + "." + key, "expected an array");
  return a;
}

long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long>();
}

/// Integers that fit in 64 bits are plain numbers, larger ones strings.
Json big_integer(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

mpz_class big_integer_from(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    const bool digits = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(), ::isdigit) &&
                        s != "-";
    if (!digits) fail(where, "not an integer string '" + s + "'");
    return mpz_class(s);
  }
  fail(where, "expected an integer or integer string");
}

Rational make_rational(const mpz_class& num, const mpz_class& den, const std::string& where) {
  if (den <= 0) fail(where, "denominator must be positive");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Json mask_json(Mask m, int nvars) {
  Json dx = Json::array();
  for (int v = 0; v < nvars; ++v) {
    if (m & dx_bit(v)) dx.push_back(v);
  }
  return Json{{"theta", has_theta(m)}, {"dx", dx}};
}

Mask mask_from(const Json& j, const Frame& frame, const std::string& where) {
  const Json& theta = field(j, "theta", where);
  if (!theta.is_boolean()) fail(where + ".theta", "expected a boolean");
  Mask m = theta.get<bool>() ? kTheta : Mask(0);
  const Json& dx = array_field(j, "dx", where);
  int last = -1;
  for (const auto& e : dx) {
    const long v = integer(e, where + ".dx");
    if (v <= last || v >= frame.size()) fail(where + ".dx", "indices must increase and lie in the frame");
    if (!frame.var(static_cast<int>(v)).coordinate) fail(where + ".dx", "dx of a parameter variable");
    m |= dx_bit(static_cast<int>(v));
    last = static_cast<int>(v);
  }
  return m;
}

Json monomial_json(const Monomial& m) { return Json(std::vector<long>(m.begin(), m.end())); }

Monomial monomial_from(const Json& j, const Frame& frame, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != 2 * frame.size()) {
    fail(where, "monomial needs 2 entries per frame variable");
  }
  Monomial m;
  for (const auto& e : j) m.push_back(static_cast<std::int32_t>(integer(e, where)));
  for (int v = 0; v < frame.size(); ++v) {
    if (power(m, v) < 0) fail(where, "negative power");
    if (frame.var(v).kind == VarKind::Periodic && (power(m, v) != 0 || freq4(m, v) % 4 != 0)) {
      fail(where, "periodic variables take integer frequencies and no powers");
    }
  }
  return m;
}

Json poly_json(const TrigPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"monomial", monomial_json(m)}, {"coef", to_json(c)}});
  return terms;
}

}  // namespace

Json to_json(const Rational& q) { return Json(to_string(q)); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational string like \"-3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

Json to_json(const Scalar& s) {
  Json out = Json::object();
  for (const auto& [p, c] : s.terms()) {
    out[std::to_string(p)] =
        Json::array({big_integer(c.re.get_num()), big_integer(c.re.get_den()), big_integer(c.im.get_num()),
                     big_integer(c.im.get_den())});
  }
  return out;
}

Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object of tau powers");
  Scalar s;
  for (const auto& [key, value] : j.items()) {
    const std::string at = where + "[" + key + "]";
    int p = 0;
    std::size_t used = 0;
    try {
      p = std::stoi(key, &used);
    } catch (const std::exception&) {
      fail(at, "tau power must be an integer");
    }
    if (used != key.size() || key != std::to_string(p)) fail(at, "tau power must be a plain integer");
    if (!value.is_array() || value.size() != 4) fail(at, "expected [num_re, den_re, num_im, den_im]");
    GaussianRational c{make_rational(big_integer_from(value[0], at), big_integer_from(value[1], at), at),
                       make_rational(big_integer_from(value[2], at), big_integer_from(value[3], at), at)};
    if (c.is_zero()) fail(at, "zero coefficients are not stored");
    s.insert_term(p, c);
  }
  return s;
}

Json to_json(const Frame& f) {
  Json out = Json::array();
  for (const auto& v : f.vars()) {
    out.push_back(Json{{"name", v.name},
                       {"kind", v.kind == VarKind::Periodic ? "periodic" : "interval"},
                       {"coordinate", v.coordinate}});
  }
  return out;
}

FramePtr frame_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    const long d = j.get<long>();
    if (d < 0 || d > 30) fail(where, "torus dimension out of range");
    return Frame::torus(static_cast<int>(d));
  }
  if (!j.is_array()) fail(where, "expected a variable list or a torus dimension");
  std::vector<Var> vars;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    const Json& name = field(j[k], "name", at);
    const Json& kind = field(j[k], "kind", at);
    const Json& coordinate = field(j[k], "coordinate", at);
    if (!name.is_string() || !kind.is_string() || !coordinate.is_boolean()) fail(at, "bad variable record");
    const std::string k_str = kind.get<std::string>();
    if (k_str != "periodic" && k_str != "interval") fail(at, "kind must be periodic or interval");
    vars.push_back(Var{name.get<std::string>(), k_str == "periodic" ? VarKind::Periodic : VarKind::Interval,
                       coordinate.get<bool>()});
  }
  if (vars.size() > 30) fail(where, "too many variables");
  return make_frame(std::move(vars));
}

Json to_json(const Form& w) {
  const int nvars = w.frame()->size();
  Json comps = Json::array();
  for (const auto& [m, p] : w.components()) {
    Json c = mask_json(m, nvars);
    c["terms"] = poly_json(p);
    comps.push_back(std::move(c));
  }
  return Json{{"frame", to_json(*w.frame())}, {"components", comps}};
}

Form form_from_json(const Json& j, const std::string& where) {
  FramePtr frame = frame_from_json(field(j, "frame", where), where + ".frame");
  Form w(frame);
  const Json& comps = array_field(j, "components", where);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const std::string at = where + ".components[" + std::to_string(k) + "]";
    const Mask m = mask_from(comps[k], *frame, at);
    const Json& terms = array_field(comps[k], "terms", at);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tt = at + ".terms[" + std::to_string(t) + "]";
      w.add_term(m, monomial_from(field(terms[t], "monomial", tt), *frame, tt + ".monomial"),
                 scalar_from_json(field(terms[t], "coef", tt), tt + ".coef"));
    }
  }
  return w;
}

Json to_json(const Chain& w) {
  const int nvars = w.frame()->size();
  Json tensors = Json::array();
  for (const auto& [key, c] : w.terms()) {
    Json slots = Json::array();
    for (int i = 0; i <= tensor_length(key); ++i) {
      Json s = mask_json(slot_mask(key, i, nvars), nvars);
      s["monomial"] = monomial_json(slot_monomial(key, i, nvars));
      slots.push_back(std::move(s));
    }
    tensors.push_back(Json{{"coef", to_json(c)}, {"slots", slots}});
  }
  return Json{{"frame", to_json(*w.frame())}, {"tensors", tensors}};
}

Chain chain_from_json(const Json& j, const std::string& where) {
  FramePtr frame = frame_from_json(field(j, "frame", where), where + ".frame");
  Chain w(frame);
  const Json& tensors = array_field(j, "tensors", where);
  for (std::size_t k = 0; k < tensors.size(); ++k) {
    const std::string at = where + ".tensors[" + std::to_string(k) + "]";
    const Json& slots = array_field(tensors[k], "slots", at);
    if (slots.empty()) fail(at, "a tensor needs at least one slot");
    std::vector<Form> forms;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const std::string st = at + ".slots[" + std::to_string(i) + "]";
      forms.push_back(Form::basis(frame, mask_from(slots[i], *frame, st),
                                  monomial_from(field(slots[i], "monomial", st), *frame, st + ".monomial"),
                                  Scalar(1)));
    }
    w.add_tensor(forms, scalar_from_json(field(tensors[k], "coef", at), at + ".coef"));
  }
  return w;
}

Json to_json(const Plot& p) {
  Json c = Json::array();
  for (const auto& q : p.c) c.push_back(to_json(q));
  return Json{{"m", p.m}, {"d", p.d}, {"A", p.A}, {"v", p.v}, {"c", c}, {"label", p.label}};
}

Plot plot_from_json(const Json& j, const std::string& where) {
  Plot p;
  p.m = static_cast<int>(integer(field(j, "m", where), where + ".m"));
  p.d = static_cast<int>(integer(field(j, "d", where), where + ".d"));
  if (p.m < 0 || p.d < 0 || p.m > 30 || p.d > 30) fail(where, "dimensions out of range");
  const Json& A = array_field(j, "A", where);
  for (std::size_t r = 0; r < A.size(); ++r) {
    if (!A[r].is_array()) fail(where + ".A", "rows must be arrays");
    std::vector<long> row;
    for (const auto& e : A[r]) row.push_back(integer(e, where + ".A[" + std::to_string(r) + "]"));
    p.A.push_back(std::move(row));
  }
  for (const auto& e : array_field(j, "v", where)) p.v.push_back(integer(e, where + ".v"));
  for (const auto& e : array_field(j, "c", where)) p.c.push_back(rational_from_json(e, where + ".c"));
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) fail(where + ".label", "expected a string");
    p.label = it->get<std::string>();
  }
  try {
    validate_plot(p);
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  return p;
}

Json to_json(const UnitaryMap& g) {
  Json word = Json::array();
  for (const auto& gen : g.word()) {
    if (const auto* d = std::get_if<DiagExp>(&gen)) {
      Json rows = Json::array();
      for (const auto& q : d->freq) {
        Json row = Json::array();
        for (const auto& x : q) row.push_back(to_json(x));
        rows.push_back(std::move(row));
      }
      word.push_back(Json{{"diag", rows}});
    } else {
      const auto& u = std::get<ConstUnitary>(gen);
      Json rows = Json::array();
      for (const auto& r : u.entries) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(to_json(x));
        rows.push_back(std::move(row));
      }
      word.push_back(Json{{"unitary", rows}});
    }
  }
  return Json{{"frame", to_json(*g.frame())}, {"size", g.size()}, {"word", word}};
}

UnitaryMap map_from_json(const Json& j, const std::string& where) {
  FramePtr frame = frame_from_json(field(j, "frame", where), where + ".frame");
  const long l = integer(field(j, "size", where), where + ".size");
  if (l < 1 || l > 16) fail(where + ".size", "matrix size out of range");
  std::vector<UnitaryGenerator> word;
  const Json& w = array_field(j, "word", where);
  for (std::size_t k = 0; k < w.size(); ++k) {
    const std::string at = where + ".word[" + std::to_string(k) + "]";
    if (!w[k].is_object() || w[k].size() != 1) fail(at, "expected {\"diag\": ...} or {\"unitary\": ...}");
    if (w[k].contains("diag")) {
      DiagExp d;
      for (const auto& row : w[k]["diag"]) {
        if (!row.is_array()) fail(at, "diag rows must be arrays");
        std::vector<Rational> q;
        for (const auto& x : row) q.push_back(rational_from_json(x, at + ".diag"));
        d.freq.push_back(std::move(q));
      }
      word.emplace_back(std::move(d));
    } else if (w[k].contains("unitary")) {
      ConstUnitary u;
      for (const auto& row : w[k]["unitary"]) {
        if (!row.is_array()) fail(at, "unitary rows must be arrays");
        std::vector<Scalar> r;
        for (const auto& x : row) r.push_back(scalar_from_json(x, at + ".unitary"));
        u.entries.push_back(std::move(r));
      }
      word.emplace_back(std::move(u));
    } else {
      fail(at, "unknown generator");
    }
  }
  try {
    return UnitaryMap(frame, static_cast<int>(l), std::move(word));
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

UnitaryMap parse_map_spec(const std::string& spec) {
  for (const auto& [name, g] : named_corpus()) {
    if (name == spec) return g;
  }
  if (!spec.empty() && spec.front() == '{') return map_from_json(parse_text(spec, "map"));
  if (std::filesystem::exists(spec)) return map_from_json(read_file(spec), spec);
  std::string names;
  for (const auto& [name, g] : named_corpus()) names += " " + name;
  throw FormatError("map '" + spec + "' is neither a corpus name (" + names.substr(1) + "), a file, nor JSON");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(where, e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path + ": cannot write");
  out << dump(j);
}

}  // namespace chenchern::io
