#include "frobknot/cli.hpp"

#include "frobknot/complex.hpp"
#include "frobknot/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace frobknot::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LinkDiagram load_diagram(const std::string& source) {
  const std::string prefix = "builder:";
  if (source.rfind(prefix, 0) == 0) return builder(source.substr(prefix.size()));
  return parse_pd(read_file(source));
}

std::pair<long, long> parse_a5(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error("--a5 expects h,t");
  try {
    std::size_t used_h = 0, used_t = 0;
    const std::string h = text.substr(0, comma), t = text.substr(comma + 1);
    const long hv = std::stol(h, &used_h), tv = std::stol(t, &used_t);
    if (used_h != h.size() || used_t != t.size()) throw Error("--a5 expects integers h,t");
    return {hv, tv};
  } catch (const std::logic_error&) {
    throw Error("--a5 expects integers h,t");
  }
}

FrobeniusData change_ring(const FrobeniusData& f, const RingSpec& ring) {
  FrobeniusData g(ring, f.rank);
  auto map = [&](const std::vector<Scalar>& v) {
    std::vector<Scalar> out;
    for (const auto& x : v) out.push_back(ring.from_rational(x));
    return out;
  };
  g.mult = map(f.mult);
  g.comult = map(f.comult);
  if (f.unit) g.unit = map(*f.unit);
  if (f.counit) g.counit = map(*f.counit);
  g.validate();
  return g;
}

MultTable table_in_ring(const MultTable& t, const RingSpec& ring) {
  std::array<Vec2, 4> p;
  for (int n = 0; n < 4; ++n)
    for (int k = 0; k < 2; ++k) p[n][k] = ring.from_rational(t.product(n / 2, n % 2)[k]);
  if (t.commutative()) return MultTable::commutative_table(ring, p[0], p[1], p[3]);
  return MultTable::general_table(ring, p[0], p[1], p[2], p[3]);
}

std::string ring_symbol(const RingSpec& ring) {
  if (ring.is_prime_field()) return "F" + std::to_string(ring.modulus());
  return ring.name();
}

std::string group_string(const HomologyRow& row, const RingSpec& ring) {
  std::vector<std::string> parts;
  if (row.free_rank == 1) parts.push_back(ring_symbol(ring));
  if (row.free_rank > 1) parts.push_back(ring_symbol(ring) + "^" + std::to_string(row.free_rank));
  for (const auto& t : row.torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t n = 1; n < parts.size(); ++n) s += " + " + parts[n];
  return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_flags(std::ostream& out, const Json& j) {
  for (const auto& [k, v] : j.items()) out << k << ": " << yes_no(v.get<bool>()) << "\n";
}

std::string count_noun(const std::string& check) {
  if (check == "thm1.1") return "pairs";
  if (check == "prop3.4") return "instances";
  return "tables";
}

struct Options {
  std::string diagram;
  std::string algebra_file;
  std::string a5_spec;
  std::string ring = "Z";
  bool normalize = false;
  bool bigraded = false;
  bool jones = false;
  bool json = false;
  std::string file;
  std::uint64_t p = 0;
  int zbound = 0;
  std::string check;
};

int cmd_homology(const Options& o, std::ostream& out) {
  if (o.algebra_file.empty() && o.a5_spec.empty())
    throw Error(
        "homology over the generic ring Z[h,t] is not supported; pick a specialization with --a5 h,t "
        "(for example --a5 0,0) or give --algebra FILE");
  const RingSpec ring = RingSpec::parse(o.ring);
  FrobeniusData f = [&] {
    if (!o.algebra_file.empty()) return change_ring(frobenius_from_json(parse_json(read_file(o.algebra_file))), ring);
    const auto [h, t] = parse_a5(o.a5_spec);
    return a5(h, t, ring);
  }();
  const LinkDiagram d = load_diagram(o.diagram);
  const ChainComplex c = build_complex(d, f, o.normalize);
  if (o.bigraded && !c.quantum) throw Error("--bigraded needs the a5(0,0) algebra");
  const HomologyTable t = o.bigraded ? bigraded_homology(c) : homology(c);
  if (o.json) {
    out << homology_to_json(t, o.normalize, ring).dump(2) << "\n";
    return Ok;
  }
  for (const auto& row : t) {
    out << "H^" << row.i;
    if (row.q) out << "," << *row.q;
    out << " = " << group_string(row, ring) << "\n";
  }
  return Ok;
}

int cmd_bracket(const Options& o, std::ostream& out) {
  const LinkDiagram d = load_diagram(o.diagram);
  const LaurentPolynomial b = kauffman_bracket(d);
  std::optional<LaurentPolynomial> nb, jones;
  if (o.normalize || o.jones) nb = normalized_bracket(d);
  if (o.jones) jones = bracket_to_q(*nb);
  if (o.json) {
    Json j{{"bracket", b.to_string("A")}};
    if (o.normalize) j["normalized"] = nb->to_string("A");
    if (jones) j["jones"] = jones->to_string("q");
    out << j.dump(2) << "\n";
    return Ok;
  }
  out << b.to_string("A") << "\n";
  if (o.normalize) out << "normalized: " << nb->to_string("A") << "\n";
  if (jones) out << "jones: " << jones->to_string("q") << "\n";
  return Ok;
}

int cmd_check_algebra(const Options& o, std::ostream& out) {
  const AxiomReport r = check_axioms(frobenius_from_json(parse_json(read_file(o.file))));
  const Json j = axiom_report_to_json(r);
  if (o.json)
    out << j.dump(2) << "\n";
  else
    print_flags(out, j);
  return r.all() ? Ok : Counterexample;
}

int cmd_relations(const Options& o, std::ostream& out) {
  const RelationReport r = verify_n2cob_relations(frobenius_from_json(parse_json(read_file(o.file))));
  const Json j = relation_report_to_json(r);
  if (o.json)
    out << j.dump(2) << "\n";
  else
    print_flags(out, j);
  return r.all() ? Ok : Counterexample;
}

int cmd_classify(const Options& o, std::ostream& out) {
  MultTable t = mult_table_from_json(parse_json(read_file(o.file)));
  if (o.p != 0) t = table_in_ring(t, RingSpec::prime_field(o.p));
  std::optional<RepresentativeFamily> family;
  try {
    family = classify(t);
  } catch (const Error& e) {
    if (std::string(e.what()) != "classification gap") throw;
  }
  if (o.json) {
    Json j{{"ring", ring_to_json(t.ring())}};
    j["family"] = family ? Json(family->to_string()) : Json(nullptr);
    if (family) j["unital"] = static_cast<bool>(find_unit(t));
    out << j.dump(2) << "\n";
  } else if (family) {
    out << family->to_string() << (find_unit(t) ? ", unital" : ", not unital") << "\n";
  } else {
    out << "classification gap\n";
  }
  return family ? Ok : Counterexample;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.zbound != 0 && o.check != "thm1.2") throw Error("--zbound applies only to thm1.2");
  const auto p_or = [&](std::uint64_t fallback) { return o.p != 0 ? o.p : fallback; };
  VerificationReport r;
  if (o.check == "thm1.2")
    r = verify_theorem_1_2(o.zbound != 0 ? SearchSpace::bounded_z(o.zbound) : SearchSpace::prime_field(p_or(2)));
  else if (o.check == "thm1.1")
    r = verify_theorem_1_1(p_or(2));
  else if (o.check == "prop3.4")
    r = verify_prop_3_4(p_or(3));
  else if (o.check == "noncomm")
    r = verify_noncommutative(p_or(2));
  else {
    if (o.p != 0 && o.p != 2) throw Error("char2 runs only over F2");
    r = verify_char2_classification();
  }
  if (o.json) {
    out << report_to_json(r).dump(2) << "\n";
  } else {
    out << r.check << " over " << r.space << ": " << r.candidates << " " << count_noun(r.check) << ", "
        << r.counterexamples.size() << (r.counterexamples.size() == 1 ? " counterexample\n" : " counterexamples\n");
    for (const auto& [name, n] : r.stages) out << "  " << name << ": " << n << "\n";
    for (const auto& [k, v] : r.facts) out << "  " << k << ": " << v << "\n";
    for (const auto& c : r.counterexamples) {
      out << "counterexample: " << c.property;
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << "\n";
      for (const auto& t : c.tables) out << "  " << mult_table_to_json(t)["products"].dump() << "\n";
    }
  }
  return r.ok() ? Ok : Counterexample;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Khovanov-type homology and Frobenius algebra checks", "frobknot"};
  app.require_subcommand(1);
  Options o;

  auto* hom = app.add_subcommand("homology", "homology of a diagram under a Frobenius algebra");
  hom->add_option("diagram", o.diagram, "PD file or builder:NAME")->required();
  auto* alg = hom->add_option("--algebra", o.algebra_file, "Frobenius algebra JSON file");
  auto* a5opt = hom->add_option("--a5", o.a5_spec, "the rank-2 algebra a5(h,t), written h,t (use --a5=-1,0 for negatives)");
  alg->excludes(a5opt);
  hom->add_option("--ring", o.ring, "coefficients: Z, Q or Fp:P")->capture_default_str();
  hom->add_flag("--normalize", o.normalize, "apply the orientation shifts");
  hom->add_flag("--bigraded", o.bigraded, "split by quantum degree (a5(0,0) only)");
  hom->add_flag("--json", o.json);

  auto* br = app.add_subcommand("bracket", "Kauffman bracket of a diagram");
  br->add_option("diagram", o.diagram, "PD file or builder:NAME")->required();
  br->add_flag("--normalize", o.normalize, "also print the writhe-normalized bracket");
  br->add_flag("--jones", o.jones, "also print the Jones polynomial in q");
  br->add_flag("--json", o.json);

  auto* chk = app.add_subcommand("check-algebra", "axiom report for a Frobenius algebra JSON file");
  chk->add_option("file", o.file)->required();
  chk->add_flag("--json", o.json);

  auto* cls = app.add_subcommand("classify", "family of an associative commutative rank-2 table");
  cls->add_option("file", o.file)->required();
  cls->add_option("--p", o.p, "read the table over F_p");
  cls->add_flag("--json", o.json);

  auto* ver = app.add_subcommand("verify", "exhaustive checks over finite spaces");
  ver->add_option("check", o.check)->required()->check(CLI::IsMember({"thm1.1", "thm1.2", "prop3.4", "char2", "noncomm"}));
  auto* popt = ver->add_option("--p", o.p, "prime field");
  auto* zopt = ver->add_option("--zbound", o.zbound, "integer coefficients in [-B, B]")->check(CLI::PositiveNumber);
  popt->excludes(zopt);
  ver->add_flag("--json", o.json);

  auto* rel = app.add_subcommand("relations", "cobordism relations for a Frobenius algebra JSON file");
  rel->add_option("file", o.file)->required();
  rel->add_flag("--json", o.json);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return InputError;
  }

  try {
    if (*hom) return cmd_homology(o, out);
    if (*br) return cmd_bracket(o, out);
    if (*chk) return cmd_check_algebra(o, out);
    if (*cls) return cmd_classify(o, out);
    if (*ver) return cmd_verify(o, out);
    return cmd_relations(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  }
}

}  // namespace frobknot::cli
