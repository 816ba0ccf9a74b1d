#include "frobknot/io.hpp"

namespace frobknot {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Vec2 vec2_from_json(const RingSpec& ring, const Json& j, const char* key) {
  if (!j.is_array() || j.size() != 2) throw Error(std::string("\"") + key + "\" must be a pair");
  return {scalar_from_json(ring, j[0]), scalar_from_json(ring, j[1])};
}

Json vec2_to_json(const RingSpec& ring, const Vec2& v) {
  return Json::array({scalar_to_json(ring, v[0]), scalar_to_json(ring, v[1])});
}

std::vector<Scalar> scalars_from_json(const RingSpec& ring, const Json& j, const char* key, std::size_t size) {
  if (!j.is_array() || j.size() != size)
    throw Error(std::string("\"") + key + "\" must hold " + std::to_string(size) + " entries");
  std::vector<Scalar> out;
  for (const auto& x : j) out.push_back(scalar_from_json(ring, x));
  return out;
}

Json scalars_to_json(const RingSpec& ring, const std::vector<Scalar>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_to_json(ring, x));
  return a;
}

Json integers_to_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p())
      a.push_back(x.get_si());
    else
      a.push_back(x.get_str());
  }
  return a;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

Json ring_to_json(const RingSpec& ring) {
  switch (ring.kind()) {
    case RingKind::Integers:
      return {{"kind", "Z"}};
    case RingKind::Rationals:
      return {{"kind", "Q"}};
    case RingKind::PrimeField:
      break;
  }
  return {{"kind", "Fp"}, {"p", ring.modulus()}};
}

RingSpec ring_from_json(const Json& j) {
  if (j.is_string()) return RingSpec::parse(j.get<std::string>());
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw Error("ring kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "Z") return RingSpec::integers();
  if (k == "Q") return RingSpec::rationals();
  if (k == "Fp") {
    const Json& p = field(j, "p");
    if (!p.is_number_unsigned()) throw Error("ring \"p\" must be a positive integer");
    return RingSpec::prime_field(p.get<std::uint64_t>());
  }
  throw Error("unknown ring kind \"" + k + "\"");
}

Json scalar_to_json(const RingSpec& ring, const Scalar& x) { return ring.format(x); }

Scalar scalar_from_json(const RingSpec& ring, const Json& j) {
  if (j.is_string()) return ring.parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return ring.from_rational(Scalar(j.get<long>()));
  throw Error("scalars must be strings or integers");
}

Json mult_table_to_json(const MultTable& t) {
  const RingSpec& r = t.ring();
  Json products = Json::object();
  products["e1e1"] = vec2_to_json(r, t.product(0, 0));
  products["e1e2"] = vec2_to_json(r, t.product(0, 1));
  if (!t.commutative()) products["e2e1"] = vec2_to_json(r, t.product(1, 0));
  products["e2e2"] = vec2_to_json(r, t.product(1, 1));
  return {{"ring", ring_to_json(r)}, {"commutative", t.commutative()}, {"products", products}};
}

MultTable mult_table_from_json(const Json& j) {
  const RingSpec ring = ring_from_json(field(j, "ring"));
  const Json& c = field(j, "commutative");
  if (!c.is_boolean()) throw Error("\"commutative\" must be true or false");
  const Json& p = field(j, "products");
  const Vec2 e11 = vec2_from_json(ring, field(p, "e1e1"), "e1e1");
  const Vec2 e12 = vec2_from_json(ring, field(p, "e1e2"), "e1e2");
  const Vec2 e22 = vec2_from_json(ring, field(p, "e2e2"), "e2e2");
  if (c.get<bool>()) {
    if (p.contains("e2e1") && vec2_from_json(ring, p.at("e2e1"), "e2e1") != e12)
      throw Error("commutative table with e2e1 different from e1e2");
    return MultTable::commutative_table(ring, e11, e12, e22);
  }
  return MultTable::general_table(ring, e11, e12, vec2_from_json(ring, field(p, "e2e1"), "e2e1"), e22);
}

Json frobenius_to_json(const FrobeniusData& f) {
  Json j{{"ring", ring_to_json(f.ring)},
         {"rank", f.rank},
         {"mult", scalars_to_json(f.ring, f.mult)},
         {"comult", scalars_to_json(f.ring, f.comult)}};
  if (f.unit) j["unit"] = scalars_to_json(f.ring, *f.unit);
  if (f.counit) j["counit"] = scalars_to_json(f.ring, *f.counit);
  return j;
}

FrobeniusData frobenius_from_json(const Json& j) {
  const RingSpec ring = ring_from_json(field(j, "ring"));
  const Json& rank = field(j, "rank");
  if (!rank.is_number_unsigned() || rank.get<std::size_t>() == 0 || rank.get<std::size_t>() > 16)
    throw Error("\"rank\" must be an integer in 1..16");
  const std::size_t r = rank.get<std::size_t>();
  FrobeniusData f(ring, r);
  f.mult = scalars_from_json(ring, field(j, "mult"), "mult", r * r * r);
  f.comult = scalars_from_json(ring, field(j, "comult"), "comult", r * r * r);
  if (j.contains("unit")) f.unit = scalars_from_json(ring, j.at("unit"), "unit", r);
  if (j.contains("counit")) f.counit = scalars_from_json(ring, j.at("counit"), "counit", r);
  f.validate();
  return f;
}

Json axiom_report_to_json(const AxiomReport& r) {
  return {{"associative", r.associative},
          {"commutative", r.commutative},
          {"coassociative", r.coassociative},
          {"cocommutative", r.cocommutative},
          {"frobenius_relation", r.frobenius_relation},
          {"unit", r.unit_ok},
          {"counit", r.counit_ok},
          {"mult_surjective", r.mult_surjective},
          {"comult_injective", r.comult_injective},
          {"comult_split_injective", r.comult_split_injective}};
}

Json relation_report_to_json(const RelationReport& r) {
  return {{"associative", r.associative},
          {"commutative", r.commutative},
          {"coassociative", r.coassociative},
          {"cocommutative", r.cocommutative},
          {"frobenius", r.frobenius}};
}

Json homology_to_json(const HomologyTable& t, bool normalized, const RingSpec& ring) {
  Json groups = Json::array();
  for (const auto& row : t) {
    Json g{{"i", row.i}};
    if (row.q) g["q"] = *row.q;
    g["free_rank"] = row.free_rank;
    g["torsion"] = integers_to_json(row.torsion);
    groups.push_back(std::move(g));
  }
  return {{"normalized", normalized}, {"ring", ring_to_json(ring)}, {"groups", groups}};
}

Json report_to_json(const VerificationReport& r) {
  Json stages = Json::array();
  for (const auto& [name, n] : r.stages) stages.push_back({{"filter", name}, {"passed", n}});
  Json facts = Json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  Json cxs = Json::array();
  for (const auto& c : r.counterexamples) {
    Json tables = Json::array();
    for (const auto& t : c.tables) tables.push_back(mult_table_to_json(t));
    Json cx{{"property", c.property}, {"tables", tables}};
    if (!c.comult.empty()) {
      const RingSpec ring = c.tables.empty() ? RingSpec::integers() : c.tables.front().ring();
      cx["comult"] = scalars_to_json(ring, c.comult);
    }
    cx["detail"] = c.detail;
    cxs.push_back(std::move(cx));
  }
  return {{"check", r.check},     {"space", r.space},         {"candidates", r.candidates},
          {"stages", stages},     {"facts", facts},           {"counterexamples", cxs}};
}

}  // namespace frobknot
