#include "quatalg/json_io.hpp"

#include "quatalg/errors.hpp"

namespace quatalg {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("JSON: missing field \"") + key + "\"");
  return j.at(key);
}

std::string text(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("JSON: field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

// Runs a decoder, turning library type errors into ParseError.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
}

Json encode_quaternion_q(const QuaternionQ& q) { return Json{{"a", to_string(q.a)}, {"b", to_string(q.b)}}; }

}  // namespace

Json parse_json(std::string_view t) {
  try {
    return Json::parse(t);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
}

// --- Br(Q) -----------------------------------------------------------------

Json encode(const BrauerClassQ& c) {
  Json list = Json::array();
  for (const auto& [v, x] : c.invariants()) list.push_back(Json{{"place", v.str()}, {"inv", to_string(x)}});
  return Json{{"invariants", list}};
}

template <>
BrauerClassQ decode<BrauerClassQ>(const Json& j) {
  return guarded([&] {
    std::map<PlaceQ, BigRational> inv;
    const Json& list = field(j, "invariants");
    if (!list.is_array()) throw ParseError("JSON: \"invariants\" must be an array");
    for (const Json& e : list) {
      PlaceQ v = PlaceQ::parse(text(e, "place"));
      if (inv.count(v)) throw ParseError("JSON: place " + v.str() + " listed twice");
      inv.emplace(v, parse_rational(text(e, "inv")));
    }
    return BrauerClassQ(std::move(inv));
  });
}

Json encode(const QuaternionQ& q) { return encode_quaternion_q(q); }

template <>
QuaternionQ decode<QuaternionQ>(const Json& j) {
  return guarded([&] { return QuaternionQ(parse_rational(text(j, "a")), parse_rational(text(j, "b"))); });
}

Json encode(const HilbertTable& t) {
  Json out = Json::object();
  int product = 1;
  for (const auto& [v, s] : t.symbols) {
    out[v.str()] = s;
    product *= s;
  }
  out["product"] = product;
  return out;
}

template <>
HilbertTable decode<HilbertTable>(const Json& j) {
  return guarded([&] {
    if (!j.is_object()) throw ParseError("JSON: Hilbert table must be an object");
    HilbertTable t;
    for (const auto& [key, value] : j.items()) {
      if (key == "product") continue;
      const int s = value.get<int>();
      if (s != 1 && s != -1) throw ParseError("JSON: Hilbert symbol must be +1 or -1");
      t.symbols.emplace(PlaceQ::parse(key), s);
    }
    return t;
  });
}

// --- factorization ------------------------------------------------------------

Json encode(const FactorizationQ& f) {
  Json list = Json::array();
  for (const auto& fac : f.factors) list.push_back(Json::array({to_string(fac.factor), fac.multiplicity}));
  return Json{{"unit", to_string(f.unit)}, {"factors", list}};
}

template <>
FactorizationQ decode<FactorizationQ>(const Json& j) {
  return guarded([&] {
    FactorizationQ f;
    f.unit = parse_rational(text(j, "unit"));
    for (const Json& e : field(j, "factors")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("JSON: factor entries are [poly, multiplicity]");
      f.factors.push_back(FactorQ{parse_poly_q(e[0].get<std::string>()), e[1].get<int>()});
    }
    return f;
  });
}

// --- square certificates ---------------------------------------------------------

Json encode(const SquareClassVerdict& v) {
  Json out{{"is_square", v.is_square}};
  if (v.root) out["root"] = to_string(*v.root);
  if (v.witness) out["witness"] = Json{{"prime", v.witness->prime}, {"factor", to_string(v.witness->factor)}};
  out["verified"] = v.verified;
  return out;
}

template <>
SquareClassVerdict decode<SquareClassVerdict>(const Json& j) {
  return guarded([&] {
    SquareClassVerdict v;
    v.is_square = field(j, "is_square").get<bool>();
    v.verified = field(j, "verified").get<bool>();
    if (j.contains("root")) v.root = parse_poly_q(text(j, "root"));
    if (j.contains("witness")) {
      const Json& w = j.at("witness");
      const auto p = field(w, "prime").get<std::uint64_t>();
      v.witness = NonsquareWitness{p, parse_poly_fp(text(w, "factor"), p)};
    }
    if (v.is_square != v.root.has_value() || v.is_square == v.witness.has_value())
      throw ParseError("JSON: a certificate carries a root iff square and a witness iff nonsquare");
    return v;
  });
}

// --- Q(x) ----------------------------------------------------------------------

Json encode(const QuaternionFF& d) { return Json{{"f", d.f.str()}, {"g", d.g.str()}}; }

template <>
QuaternionFF decode<QuaternionFF>(const Json& j) {
  return guarded([&] { return QuaternionFF{FactoredFunc::parse(text(j, "f")), FactoredFunc::parse(text(j, "g"))}; });
}

Json encode(const ResidueCharacter& r) {
  return Json{{"place", to_string(r.place)},
              {"trivial", r.trivial},
              {"symbol", to_string(r.symbol)},
              {"certificate", encode(r.certificate)}};
}

template <>
ResidueCharacter decode<ResidueCharacter>(const Json& j) {
  return guarded([&] {
    ResidueCharacter r;
    r.place = parse_poly_q(text(j, "place"));
    r.trivial = field(j, "trivial").get<bool>();
    r.symbol = parse_poly_q(text(j, "symbol"));
    r.certificate = decode<SquareClassVerdict>(field(j, "certificate"));
    return r;
  });
}

Json encode(const ResidueTableQ& t) {
  Json out = encode(t.algebra);
  Json table = Json::object();
  for (const auto& r : t.residues) {
    Json e = encode(r);
    e.erase("place");
    table[to_string(r.place)] = e;
  }
  out["residues"] = table;
  return out;
}

template <>
ResidueTableQ decode<ResidueTableQ>(const Json& j) {
  return guarded([&] {
    ResidueTableQ t{decode<QuaternionFF>(j), {}};
    for (const auto& [place, e] : field(j, "residues").items()) {
      Json full = e;
      full["place"] = place;
      t.residues.push_back(decode<ResidueCharacter>(full));
    }
    return t;
  });
}

Json encode(const IsomorphismVerdict& v) {
  Json out{{"verdict", v.isomorphic ? "isomorphic" : "not_isomorphic"}, {"isomorphic", v.isomorphic}};
  if (v.residue_witness) {
    const auto& w = *v.residue_witness;
    out["residue_witness"] = Json{{"place", to_string(w.place)},
                                  {"symbol1", to_string(w.symbol1)},
                                  {"symbol2", to_string(w.symbol2)},
                                  {"ratio_certificate", encode(w.ratio_certificate)}};
  }
  if (v.specialization_point) out["specialization_point"] = to_string(*v.specialization_point);
  if (v.specialized1) out["specialized1"] = encode_quaternion_q(*v.specialized1);
  if (v.specialized2) out["specialized2"] = encode_quaternion_q(*v.specialized2);
  if (v.constant_difference) out["constant_difference"] = encode(*v.constant_difference);
  out["citations"] = v.citations;
  return out;
}

template <>
IsomorphismVerdict decode<IsomorphismVerdict>(const Json& j) {
  return guarded([&] {
    IsomorphismVerdict v;
    v.isomorphic = field(j, "isomorphic").get<bool>();
    if (j.contains("residue_witness")) {
      const Json& w = j.at("residue_witness");
      v.residue_witness = ResidueMismatch{parse_poly_q(text(w, "place")), parse_poly_q(text(w, "symbol1")),
                                          parse_poly_q(text(w, "symbol2")),
                                          decode<SquareClassVerdict>(field(w, "ratio_certificate"))};
    }
    if (j.contains("specialization_point")) v.specialization_point = parse_rational(text(j, "specialization_point"));
    if (j.contains("specialized1")) v.specialized1 = decode<QuaternionQ>(j.at("specialized1"));
    if (j.contains("specialized2")) v.specialized2 = decode<QuaternionQ>(j.at("specialized2"));
    if (j.contains("constant_difference")) v.constant_difference = decode<BrauerClassQ>(j.at("constant_difference"));
    v.citations = field(j, "citations").get<std::vector<std::string>>();
    return v;
  });
}

// --- F_p(x) ------------------------------------------------------------------------

Json encode(const QuaternionFFp& d) {
  return Json{{"characteristic", d.f.characteristic()}, {"f", d.f.str()}, {"g", d.g.str()}};
}

template <>
QuaternionFFp decode<QuaternionFFp>(const Json& j) {
  return guarded([&] {
    const auto p = field(j, "characteristic").get<std::uint64_t>();
    return QuaternionFFp{FactoredFuncFp::parse(text(j, "f"), p), FactoredFuncFp::parse(text(j, "g"), p)};
  });
}

Json encode(const QuatClassFp& c) {
  Json residues = Json::object();
  for (const auto& [v, r] : c.residues) residues[v.str()] = r;
  return Json{{"characteristic", c.characteristic}, {"residues", residues}};
}

template <>
QuatClassFp decode<QuatClassFp>(const Json& j) {
  return guarded([&] {
    QuatClassFp c;
    c.characteristic = field(j, "characteristic").get<std::uint64_t>();
    check_characteristic(c.characteristic);
    for (const auto& [place, r] : field(j, "residues").items()) {
      if (r.get<int>() != -1) throw ParseError("JSON: stored residues are -1");
      c.residues.emplace(PlaceFFp::parse(place, c.characteristic), -1);
    }
    if (c.residues.size() % 2 != 0) throw MathError("residue vector violates reciprocity");
    return c;
  });
}

Json encode(const IsomorphismVerdictFp& v) {
  Json out{{"verdict", v.isomorphic ? "isomorphic" : "not_isomorphic"},
           {"isomorphic", v.isomorphic},
           {"class1", encode(v.class1)},
           {"class2", encode(v.class2)}};
  if (v.witness) out["witness"] = v.witness->str();
  return out;
}

template <>
IsomorphismVerdictFp decode<IsomorphismVerdictFp>(const Json& j) {
  return guarded([&] {
    IsomorphismVerdictFp v;
    v.isomorphic = field(j, "isomorphic").get<bool>();
    v.class1 = decode<QuatClassFp>(field(j, "class1"));
    v.class2 = decode<QuatClassFp>(field(j, "class2"));
    if (j.contains("witness")) v.witness = PlaceFFp::parse(text(j, "witness"), v.class1.characteristic);
    return v;
  });
}

}  // namespace quatalg
