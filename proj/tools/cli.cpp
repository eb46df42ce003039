#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tsrforge/enumeration.hpp"
#include "tsrforge/json_io.hpp"
#include "tsrforge/search.hpp"
#include "tsrforge/tables.hpp"
#include "tsrforge/verify.hpp"

using namespace tsrforge;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kBadArgs = 2, kBudget = 3 };

struct Global {
  unsigned threads = 1;
  std::uint64_t seed = 1;
  int guard_bits = 0;
};

Limits limits_for(const Global& g) {
  Limits l = Limits::from_environment();
  if (g.guard_bits > 0) {
    const std::uint64_t v = std::uint64_t{1} << g.guard_bits;
    l.enumeration = l.special_candidates = l.matrix_count = l.field_order = v;
  }
  return l;
}

std::string source_name(ModulusSource s) {
  switch (s) {
    case ModulusSource::None: return "none";
    case ModulusSource::Conway: return "conway";
    case ModulusSource::LeastPrimitive: return "least-primitive";
    case ModulusSource::User: return "user";
  }
  return "?";
}

FieldPtr make_field(std::uint64_t p, unsigned k, const std::string& modulus) {
  if (modulus.empty()) return Field::extension(p, k);
  Polynomial mp = parse_polynomial(Field::prime(p), modulus);
  if (mp.size_degree() != k) fail(ErrorKind::BadModulus, "modulus degree differs from k");
  std::vector<std::uint32_t> c(mp.coeffs().begin(), mp.coeffs().end());
  return Field::extension(p, k, c);
}

std::string modulus_text(const Field& f) {
  if (f.is_prime_field()) return "";
  std::vector<Elem> c(f.modulus().begin(), f.modulus().end());
  return to_string(Polynomial(Field::prime(f.characteristic()), std::move(c)));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, path + ": " + e.what());
  }
}

int cmd_field(std::uint64_t p, unsigned k, const std::string& modulus, const std::string& element) {
  FieldPtr f = make_field(p, k, modulus);
  Json j = {{"p", p},
            {"k", k},
            {"order", f->order()},
            {"modulus", modulus_text(*f)},
            {"modulus_source", source_name(f->modulus_source())}};
  if (!element.empty()) {
    const Elem x = parse_element(*f, element);
    j["element"] = format_element(*f, x);
    if (x != 0) {
      j["order_of_element"] = multiplicative_order(*f, x);
      j["primitive"] = is_primitive_element(*f, x);
      std::vector<Elem> mp = minimal_polynomial(FieldElement(f, x), p).coeffs();
      j["minimal_polynomial"] = to_string(Polynomial(Field::prime(p), mp));
    }
  }
  std::cout << dump_line(j) << "\n";
  return kOk;
}

int cmd_test_primitive(std::uint64_t p, unsigned k, const std::string& modulus, const std::string& poly,
                       const std::string& spec_file, const std::string& emit) {
  if (!spec_file.empty()) {
    const TsrSpec spec = spec_from_json(read_json_file(spec_file));
    const Polynomial chi = tsr_charpoly_formula(spec);
    const PrimitivityResult r = is_primitive_poly(chi);
    Json j = {{"spec", spec_to_json(spec)}, {"charpoly", to_string(chi)}, {"primitive", r.primitive}};
    if (r.certificate) j["certificate"] = certificate_to_json(*r.certificate);
    if (emit == "text") {
      std::cout << "charpoly " << to_string(chi) << "\n" << (r.primitive ? "primitive" : "not primitive") << "\n";
    } else {
      std::cout << dump_line(j) << "\n";
    }
    return kOk;
  }
  if (poly.empty()) fail(ErrorKind::ParseError, "give --poly or --spec");
  FieldPtr f = make_field(p, k, modulus);
  const Polynomial fpoly = parse_polynomial(f, poly);
  const PrimitivityResult r = is_primitive_poly(fpoly);
  if (emit == "text") {
    std::cout << to_string(fpoly) << (r.primitive ? " is primitive" : " is not primitive") << "\n";
  } else {
    Json j = {{"poly", to_string(fpoly)}, {"irreducible", is_irreducible(fpoly)}, {"primitive", r.primitive}};
    if (r.certificate) j["certificate"] = certificate_to_json(*r.certificate);
    std::cout << dump_line(j) << "\n";
  }
  return kOk;
}

int cmd_search(std::uint64_t q, unsigned m, unsigned n, const SearchOptions& opt, const std::string& emit) {
  const SearchResult r = search_primitive_tsr(q, m, n, opt);
  const std::string replay = replay_search(r);
  if (emit == "text") {
    std::cout << "f " << to_string(r.provenance.f) << "\n";
    std::cout << "g " << to_string(r.provenance.g) << "\n";
    std::cout << "lambda " << format_element(*r.provenance.ext, r.provenance.lambda) << "\n";
    std::cout << "h " << to_string(r.provenance.h) << "\n";
    std::cout << "spec " << dump_line(spec_to_json(r.spec)) << "\n";
    std::cout << "charpoly " << to_string(r.charpoly) << "\n";
    std::cout << "certificate " << dump_line(certificate_to_json(r.certificate)) << "\n";
    std::cout << "candidates_tried " << r.candidates_tried << "\n";
    std::cout << "replay " << (replay.empty() ? "ok" : replay) << "\n";
  } else {
    Json j = search_result_to_json(r);
    j["replay"] = replay.empty() ? "ok" : replay;
    std::cout << dump_line(j) << "\n";
  }
  return replay.empty() ? kOk : kVerifyFailed;
}

int cmd_conjecture(std::uint64_t q, unsigned m, unsigned n, const std::string& form, const SearchOptions& opt) {
  ConjectureForm f;
  if (form == "direct") {
    f = ConjectureForm::Direct;
  } else if (form == "composition") {
    f = ConjectureForm::Composition;
  } else {
    fail(ErrorKind::UnknownKind, "form must be direct or composition");
  }
  const ConjectureWitness w = verify_conjecture(q, m, n, f, opt);
  std::cout << dump_line(witness_to_json(w)) << "\n";
  if (w.found && !w.cross_verified) return kVerifyFailed;
  return kOk;
}

int cmd_enumerate(std::uint64_t q, unsigned m, unsigned n, const std::string& form, const Limits& limits,
                  unsigned threads) {
  if (form == "tsrp") {
    const auto specs = enumerate_tsrp_bruteforce(q, m, n, limits, threads);
    for (const auto& s : specs) std::cout << dump_line(spec_to_json(s)) << "\n";
    std::cout << "count " << specs.size() << "\n";
    return kOk;
  }
  const auto polys = enumerate_special_primitives(q, m, n, parse_special_form(form), limits, threads);
  for (const auto& p : polys) std::cout << to_string(p) << "\n";
  std::cout << "count " << polys.size() << "\n";
  return kOk;
}

int cmd_count_r(unsigned from, unsigned to, bool deep, bool tally, const Limits& limits, unsigned threads) {
  if (deep) to = std::max(to, 12u);
  std::cout << "m,r,P2m2" << (tally ? ",trace_one_elements" : "") << "\n";
  for (unsigned m = from; m <= to; ++m) {
    const TraceOneCount c = count_trace_one_classes(m, limits, threads);
    std::cout << m << "," << c.r << "," << c.p2m2;
    if (tally) std::cout << "," << count_trace_one_elements(m, limits);
    std::cout << "\n" << std::flush;
  }
  return kOk;
}

int cmd_tables(const std::vector<std::string>& ids, const std::string& out_dir, const TableOptions& opt) {
  std::vector<TableId> which;
  for (const auto& id : ids) {
    if (id == "all") {
      which = all_tables();
      break;
    }
    which.push_back(parse_table_id(id));
  }
  std::filesystem::create_directories(out_dir);
  for (TableId id : which) {
    const TableReport t = build_table(id, opt);
    for (const auto& [name, contents] : t.files) {
      const auto path = std::filesystem::path(out_dir) / name;
      std::ofstream out(path, std::ios::binary);
      out << contents;
      if (!out) fail(ErrorKind::ParseError, "cannot write " + path.string());
      std::cout << "wrote " << path.string() << "\n";
    }
  }
  return kOk;
}

int cmd_verify(const VerifyOptions& opt, const std::string& certificate) {
  if (!certificate.empty()) {
    const PrimitivityCertificate cert = certificate_from_json(read_json_file(certificate));
    const bool ok = verify_certificate(cert);
    std::cout << (ok ? "PASS" : "FAIL") << " certificate " << to_string(cert.poly) << "\n";
    return ok ? kOk : kVerifyFailed;
  }
  std::string first_failure;
  run_verify(opt, [&](const CheckResult& r) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) std::cout << ": " << r.detail;
    std::cout << "\n" << std::flush;
    if (!r.passed && first_failure.empty()) first_failure = r.name;
  });
  if (!first_failure.empty()) {
    std::cout << "first failed check: " << first_failure << "\n";
    return kVerifyFailed;
  }
  std::cout << "all checks passed\n";
  return kOk;
}

int cmd_bound(std::uint64_t q, unsigned m, unsigned n, bool brute, const Limits& limits, unsigned threads) {
  Json j = {{"q", q},
            {"m", m},
            {"n", n},
            {"upper_bound", tsrp_upper_bound(q, m, n).str()},
            {"gl_order", gl_order(q, m).str()},
            {"lfsr_prim", closed_form_count(CountKind::LfsrPrim, q, 1, m * n).str()},
            {"sigma_prim", closed_form_count(CountKind::SigmaPrim, q, m, n).str()},
            {"sigma_irr", closed_form_count(CountKind::SigmaIrr, q, m, n).str()}};
  int code = kOk;
  if (brute) {
    const auto pc = enumerate_special_primitives(q, m, n, SpecialForm::Pqmn, limits, threads).size();
    const auto count = enumerate_tsrp_bruteforce(q, m, n, limits, threads).size();
    j["p_count"] = pc;
    j["theorem_count"] = tsrp_count_theorem(q, m, n, pc).str();
    j["bruteforce_count"] = count;
    j["within_bound"] = BigInt(count) <= tsrp_upper_bound(q, m, n);
    if (!j["within_bound"].get<bool>()) code = kVerifyFailed;
  }
  std::cout << dump_line(j) << "\n";
  return code;
}

int exit_code_for(const TsrError& e) {
  switch (e.kind()) {
    case ErrorKind::BudgetExhausted: return kBudget;
    case ErrorKind::ExistenceViolation:
    case ErrorKind::FiberSizeViolation: return kVerifyFailed;
    default: return kBadArgs;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tsrforge: primitive transformation shift registers over finite fields"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--threads", g.threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized sweeps")->capture_default_str();
  app.add_option("--guard-bits", g.guard_bits, "Override every brute-force guard with 2^bits")->check(CLI::Range(1, 40));

  std::uint64_t p = 2, q = 2;
  unsigned k = 1, m = 2, n = 2;
  std::string modulus, element, poly, spec_file, emit = "json", form, certificate, out_dir = "tables";
  std::uint64_t budget = std::uint64_t{1} << 22;
  bool allow_even_n = false, deep = false, tally = false, brute = false, inject_fault = false;
  unsigned r_from = 2, r_to = 10;
  std::vector<std::string> table_ids{"all"};
  std::string level = "quick";

  auto* field = app.add_subcommand("field", "Describe F_{p^k} and optionally one element");
  field->add_option("--p", p, "Characteristic")->required();
  field->add_option("--k", k, "Extension degree")->capture_default_str();
  field->add_option("--modulus", modulus, "Monic modulus over F_p, e.g. \"x^2 + x + 1\"");
  field->add_option("--element", element, "Element in the symbol a, e.g. \"a+1\"");

  auto* testp = app.add_subcommand("test-primitive", "Primitivity test with certificate");
  testp->add_option("--p", p, "Characteristic")->capture_default_str();
  testp->add_option("--k", k, "Extension degree")->capture_default_str();
  testp->add_option("--modulus", modulus, "Monic modulus over F_p");
  testp->add_option("--poly", poly, "Polynomial text");
  testp->add_option("--spec", spec_file, "TSR spec JSON file; tests its characteristic polynomial");
  testp->add_option("--emit", emit)->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  auto add_qmn = [&](CLI::App* sub) {
    sub->add_option("--q", q, "Base field order (prime)")->required();
    sub->add_option("--m", m, "Word size m")->required();
    sub->add_option("--n", n, "Order n")->required();
  };

  auto* search = app.add_subcommand("search-tsr", "Search for a primitive TSR via primitive f(g(X))");
  add_qmn(search);
  search->add_option("--budget", budget, "Candidate (f, g) pairs to try")->capture_default_str();
  search->add_option("--emit", emit)->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  search->add_flag("--allow-even-n", allow_even_n, "Run the scan for even n when q >= 3");

  auto* conj = app.add_subcommand("conjecture", "Scan for a witness of the g(X)+lambda or f(g(X)) form");
  add_qmn(conj);
  conj->add_option("--form", form, "direct or composition")->required();
  conj->add_option("--budget", budget, "Candidate ceiling")->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive enumeration, one item per line plus a count");
  add_qmn(enumerate);
  enumerate->add_option("--form", form, "P_qmn, P_mnq or tsrp")->required()->check(CLI::IsMember({"P_qmn", "P_mnq", "tsrp"}));

  auto* count_r = app.add_subcommand("count-r", "Trace-one conjugate classes, CSV m,r,P2m2");
  count_r->add_option("--from", r_from, "First m")->capture_default_str();
  count_r->add_option("--to", r_to, "Last m")->capture_default_str();
  count_r->add_flag("--deep", deep, "Extend to m = 12");
  count_r->add_flag("--tally", tally, "Add the element-level trace-one count");

  auto* tables = app.add_subcommand("tables", "Regenerate the published tables as CSV files");
  tables->add_option("--id", table_ids, "t1..t5, r_table or all")->capture_default_str();
  tables->add_option("--out", out_dir, "Output directory")->capture_default_str();
  tables->add_flag("--deep", deep, "r_table up to m = 12");

  auto* verify = app.add_subcommand("verify", "Run the invariant suite, or check a certificate file");
  verify->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  verify->add_flag("--inject-fault", inject_fault, "Perturb the characteristic polynomial formula (negative control)");
  verify->add_option("--certificate", certificate, "Certificate JSON file");

  auto* bound = app.add_subcommand("bound", "Upper bound and closed-form counts");
  add_qmn(bound);
  bound->add_flag("--brute", brute, "Also enumerate TSRP and compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadArgs;
  }

  try {
    const Limits limits = limits_for(g);
    SearchOptions sopt;
    sopt.budget = budget;
    sopt.allow_even_n = allow_even_n;
    sopt.threads = g.threads;
    sopt.limits = limits;
    if (*field) return cmd_field(p, k, modulus, element);
    if (*testp) return cmd_test_primitive(p, k, modulus, poly, spec_file, emit);
    if (*search) return cmd_search(q, m, n, sopt, emit);
    if (*conj) return cmd_conjecture(q, m, n, form, sopt);
    if (*enumerate) return cmd_enumerate(q, m, n, form, limits, g.threads);
    if (*count_r) return cmd_count_r(r_from, r_to, deep, tally, limits, g.threads);
    if (*tables) return cmd_tables(table_ids, out_dir, TableOptions{deep, g.threads, limits});
    if (*verify) return cmd_verify(VerifyOptions{parse_verify_level(level), inject_fault, g.threads, g.seed, limits}, certificate);
    if (*bound) return cmd_bound(q, m, n, brute, limits, g.threads);
  } catch (const BudgetExhaustedError& e) {
    std::cerr << "error: " << e.what() << " (candidates tried: " << e.candidates_tried()
              << (e.space_exhausted() ? ", space exhausted" : "") << ")\n";
    return kBudget;
  } catch (const TsrError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kBadArgs;
}
