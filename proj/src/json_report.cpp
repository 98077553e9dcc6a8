#include "sgalg/json_report.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

namespace sgalg {

using nlohmann::json;

namespace {

// y^mu - x^lambda, written with the y-power first.
std::string gluing_text(const GluingData& gd, const std::vector<std::string>& names) {
  const auto& terms = gd.extra_generator.terms();
  std::string pos, neg;
  for (const auto& [m, c] : terms) (c > 0 ? pos : neg) = to_string(m, names);
  return pos + " - " + neg;
}

json lattice_list(const std::vector<LatticeVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

json vector_list(const std::vector<IntegerVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

json polynomial_list(const std::vector<Polynomial>& ps, const std::vector<std::string>& names,
                     const MonomialOrder& order) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_string(p, names, order));
  return out;
}

json apery_json(const SemigroupFamily& f) {
  auto [e1, e2] = extremal_rays(f);
  AperyEnumeration brute = apery_bruteforce(f);
  AperySet closed = f.is_extended() ? apery_extended(f) : apery_closed_form(f);
  json j;
  j["rays"] = lattice_list({e1, e2});
  j["closed_form"] = lattice_list(closed.elements);
  j["enumeration"] = lattice_list(brute.set.elements);
  j["enumeration_complete"] = !brute.cap_too_small;
  j["elements"] = f.is_extended() ? j["enumeration"] : j["closed_form"];
  j["agree"] = closed.elements == brute.set.elements;
  if (closed.elements != brute.set.elements)
    j["note"] = "closed form and enumeration differ; the enumeration follows the definition";
  return j;
}

json ideal_json(const SemigroupFamily& f) {
  const std::size_t n = family_nvars(f);
  auto names = family_variable_names(f.k(), f.is_extended());
  MonomialOrder order = MonomialOrder::grevlex(n);
  std::vector<Polynomial> G =
      f.is_extended() ? extended_generators(f) : generating_set(f.k()).G;
  json j;
  j["variables"] = names;
  j["order"] = "grevlex";
  j["generators"] = ideal_generator_strings(f);
  j["groebner"] = polynomial_list(buchberger(G, order).elements, names, order);
  j["mu"] = f.mu();
  return j;
}

json hilbert_json(const HilbertSeriesForm& h) {
  json terms = json::array();
  for (const auto& [s, c] : h.numerator)
    terms.push_back({{"exponent", vector_json(s)}, {"coefficient", integer_json(c)}});
  return {{"numerator_terms", terms}, {"denominator", lattice_list(h.denominator)}};
}

json resolution_json(const GradedResolution& res) {
  json shifts = json::array();
  for (const auto& c : res.shifts) {
    json level = json::array();
    for (const auto& s : c)
      level.push_back({{"degree", vector_json(s.degree)},
                       {"multiplicity", s.multiplicity},
                       {"a", s.a_coeff},
                       {"d", s.d_coeff}});
    shifts.push_back(level);
  }
  return {{"betti", res.betti}, {"shifts", shifts}};
}

json extension_json(const SemigroupFamily& f) {
  GluingData gd = gluing_data(f);
  auto names = family_variable_names(f.k(), true);
  json lambda = json::array();
  for (const auto& c : gd.lambda.coefficients) lambda.push_back(integer_json(c));
  json j;
  j["b"] = vector_json(*f.extension());
  j["mu"] = gd.mu;
  j["lambda"] = lambda;
  j["qualifying_representations"] = gd.qualifying_representations;
  j["extra_generator"] = gluing_text(gd, names);
  j["apery"] = lattice_list(apery_extended(f).elements);
  j["qf"] = vector_list(qf_extended(f));
  if (f.k() <= 4) {
    j["betti"] = extended_betti(f.k());
    j["mapping_cone_betti"] = mapping_cone_betti(resolution(f.k(), f).betti);
  } else {
    j["betti"] = nullptr;
    j["mapping_cone_betti"] = nullptr;
  }
  return j;
}

json checks_json(const Report& r) {
  json out = json::array();
  for (const auto& c : r.checks) out.push_back(check_json(c));
  return out;
}

Report run_checks(const SemigroupFamily& f, ReportOptions options,
                  const std::vector<std::string>& only) {
  options.only = only;
  return full_report(f, options);
}

void require_closed_forms(const SemigroupFamily& f, const char* what) {
  if (f.is_extended())
    throw UnsupportedK(std::string(what) + ": closed forms cover base families only");
  if (f.k() > 4)
    throw UnsupportedK(std::string(what) + ": closed forms exist only for k = 2, 3, 4 (got k = " +
                       std::to_string(f.k()) + ")");
}

}  // namespace

std::vector<std::string> ideal_generator_strings(const SemigroupFamily& f) {
  const std::size_t n = family_nvars(f);
  auto names = family_variable_names(f.k(), f.is_extended());
  std::vector<std::string> out;
  for (const auto& g : generating_set(f.k(), n).G) out.push_back(to_string(g, names, MonomialOrder::grevlex(n)));
  if (f.is_extended()) out.push_back(gluing_text(gluing_data(f), names));
  return out;
}

Command parse_command(const std::string& name) {
  static const std::pair<const char*, Command> table[] = {
      {"analyze", Command::Analyze},   {"ideal", Command::Ideal},
      {"groebner", Command::Groebner}, {"hilbert", Command::Hilbert},
      {"resolution", Command::Resolution}, {"extend", Command::Extend},
      {"verify", Command::Verify}};
  for (const auto& [n, c] : table)
    if (name == n) return c;
  throw Error("unknown command: " + name);
}

std::string to_string(Command c) {
  switch (c) {
    case Command::Analyze: return "analyze";
    case Command::Ideal: return "ideal";
    case Command::Groebner: return "groebner";
    case Command::Hilbert: return "hilbert";
    case Command::Resolution: return "resolution";
    case Command::Extend: return "extend";
    case Command::Verify: return "verify";
  }
  return "?";
}

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max() &&
      v.fits_slong_p())
    return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

json vector_json(const IntegerVector& v) { return json::array({integer_json(v.x), integer_json(v.y)}); }

json family_json(const SemigroupFamily& f) {
  json j;
  j["a"] = vector_json(f.a());
  j["d"] = vector_json(f.d());
  j["k"] = f.k();
  j["b"] = f.is_extended() ? vector_json(*f.extension()) : json(nullptr);
  j["generators"] = lattice_list(f.generators());
  j["description"] = f.describe();
  return j;
}

json check_json(const Check& c) {
  json j = {{"name", c.name}, {"passed", c.passed}};
  j["witness"] = c.witness.empty() ? json(nullptr) : json(c.witness);
  j["note"] = c.note.empty() ? json(nullptr) : json(c.note);
  return j;
}

json build_report(const SemigroupFamily& f, Command command, const ReportOptions& options) {
  json j;
  j["command"] = to_string(command);
  j["family"] = family_json(f);
  const int k = f.k();
  Report checks;

  switch (command) {
    case Command::Analyze:
    case Command::Verify: {
      if (command == Command::Analyze) {
        j["apery"] = apery_json(f);
        auto qf = quasi_frobenius(f, f.is_extended() ? apery_set(f) : apery_closed_form(f));
        j["qf"] = vector_list(qf);
        int type = cm_type(f);
        j["cm_type"] = type;
        j["flags"] = {{"cohen_macaulay", is_cohen_macaulay(f).cohen_macaulay},
                      {"gorenstein", type == 1},
                      {"normal", is_normal(f, qf).normal},
                      {"koszul", f.is_extended() ? json(nullptr) : json(koszul_flag(f))}};
        j["ideal"] = ideal_json(f);
        bool closed = !f.is_extended() && k <= 4;
        j["hilbert"] = closed ? hilbert_json(hilbert_numerator(k, f)) : json(nullptr);
        j["resolution"] = closed ? resolution_json(resolution(k, f)) : json(nullptr);
        j["regularity"] = f.is_extended() ? json(nullptr) : json(regularity(f).regularity);
        j["extension"] = f.is_extended() ? extension_json(f) : json(nullptr);
      }
      checks = run_checks(f, options, {});
      break;
    }
    case Command::Ideal:
      j["ideal"] = ideal_json(f);
      checks = run_checks(f, options, {"quotient_dimension", "ideal_identity"});
      break;
    case Command::Groebner:
      j["ideal"] = ideal_json(f);
      checks = run_checks(f, options, {"groebner_basis", "quotient_dimension"});
      break;
    case Command::Hilbert:
      require_closed_forms(f, "hilbert");
      j["hilbert"] = hilbert_json(hilbert_numerator(k, f));
      checks = run_checks(f, options, {"hilbert_truncation"});
      break;
    case Command::Resolution:
      require_closed_forms(f, "resolution");
      j["resolution"] = resolution_json(resolution(k, f));
      j["regularity"] = regularity(f).regularity;
      checks = run_checks(f, options, {"complex", "regularity"});
      break;
    case Command::Extend:
      if (!f.is_extended()) throw Error("extend: --b is required");
      j["apery"] = apery_json(f);
      j["extension"] = extension_json(f);
      checks = run_checks(f, options, {"quotient_dimension", "gluing", "ideal_identity"});
      break;
  }

  j["checks"] = checks_json(checks);
  if (options.record_timings) {
    json t = json::object();
    for (const auto& [name, secs] : checks.timings) t[name] = secs;
    j["timings"] = t;
  }
  return j;
}

bool checks_passed(const json& report) {
  if (!report.contains("checks")) return true;
  for (const auto& c : report["checks"])
    if (!c["passed"].get<bool>()) return false;
  return true;
}

namespace {

std::string vec_text(const json& v) {
  auto item = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  return "(" + item(v[0]) + "," + item(v[1]) + ")";
}

std::string list_text(const json& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + vec_text(vs[i]);
  return out + "}";
}

std::string yes_no(const json& b) {
  if (b.is_null()) return "n/a";
  return b.get<bool>() ? "yes" : "no";
}

}  // namespace

std::string render_text(const json& r) {
  std::ostringstream os;
  os << "family: " << r["family"]["description"].get<std::string>() << "\n";
  if (r.contains("apery")) {
    os << "Apery set: " << list_text(r["apery"]["elements"]) << "\n";
    if (!r["apery"]["agree"].get<bool>())
      os << "  closed form: " << list_text(r["apery"]["closed_form"]) << "\n  note: "
         << r["apery"]["note"].get<std::string>() << "\n";
  }
  if (r.contains("qf")) os << "QF: " << list_text(r["qf"]) << "\n";
  if (r.contains("cm_type")) os << "Cohen-Macaulay type: " << r["cm_type"].dump() << "\n";
  if (r.contains("flags")) {
    const auto& fl = r["flags"];
    os << "Cohen-Macaulay: " << yes_no(fl["cohen_macaulay"]) << "\n"
       << "Gorenstein: " << yes_no(fl["gorenstein"]) << "\n"
       << "normal: " << yes_no(fl["normal"]) << "\n"
       << "Koszul: " << yes_no(fl["koszul"]) << "\n";
  }
  if (r.contains("ideal")) {
    os << "ideal generators:\n";
    for (const auto& g : r["ideal"]["generators"]) os << "  " << g.get<std::string>() << "\n";
    os << "reduced Groebner basis (grevlex):\n";
    for (const auto& g : r["ideal"]["groebner"]) os << "  " << g.get<std::string>() << "\n";
  }
  if (r.contains("hilbert") && !r["hilbert"].is_null()) {
    os << "Hilbert numerator:";
    for (const auto& t : r["hilbert"]["numerator_terms"]) {
      auto c = t["coefficient"].get<std::int64_t>();
      os << " " << (c < 0 ? "-" : "+");
      if (c != 1 && c != -1) os << (c < 0 ? -c : c);
      os << "t^" << vec_text(t["exponent"]);
    }
    os << "\nHilbert denominator: prod (1 - t^g), g in " << list_text(r["hilbert"]["denominator"])
       << "\n";
  }
  if (r.contains("resolution") && !r["resolution"].is_null()) {
    os << "Betti numbers: " << r["resolution"]["betti"].dump() << "\n";
    const auto& shifts = r["resolution"]["shifts"];
    for (std::size_t i = 1; i < shifts.size(); ++i) {
      os << "  C_" << i << ":";
      for (const auto& s : shifts[i]) {
        os << " " << s["a"].get<int>() << "a+" << s["d"].get<int>() << "d";
        if (s["multiplicity"].get<int>() > 1) os << " (x" << s["multiplicity"].get<int>() << ")";
      }
      os << "\n";
    }
  }
  if (r.contains("regularity") && !r["regularity"].is_null())
    os << "regularity of I_S: " << r["regularity"].dump() << "\n";
  if (r.contains("extension") && !r["extension"].is_null()) {
    const auto& e = r["extension"];
    os << "extension by b = " << vec_text(e["b"]) << ": mu = " << e["mu"].dump()
       << ", lambda = " << e["lambda"].dump() << "\n"
       << "  extra generator: " << e["extra_generator"].get<std::string>() << "\n"
       << "  Apery set (closed form): " << list_text(e["apery"]) << "\n"
       << "  QF: " << list_text(e["qf"]) << "\n";
    if (!e["betti"].is_null()) os << "  Betti numbers: " << e["betti"].dump() << "\n";
  }
  if (!r["checks"].empty()) {
    os << "checks:\n";
    for (const auto& c : r["checks"]) {
      os << "  [" << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "] " << c["name"].get<std::string>();
      if (!c["witness"].is_null()) os << ": " << c["witness"].get<std::string>();
      else if (!c["note"].is_null()) os << " (" << c["note"].get<std::string>() << ")";
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace sgalg
