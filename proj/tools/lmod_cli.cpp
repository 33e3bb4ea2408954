// Command-line front end: evaluate Psi on twist words, decide liftability,
// run the verification suites, and print generating sets, coset indices and
// maximality tables. All numeric output is exact.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <lmod/lmod.hpp>

namespace {

using namespace lmod;

int cmd_eval(const std::string& text, long long mod) {
  const TwistWord w = word_parse(text);
  if (mod != 0) {
    const ResidueMat3 m = eval_psi_mod(w, mod);
    std::cout << "word: " << (w.empty() ? "(empty)" : w.str()) << "\n"
              << "psi mod " << mod << ":\n"
              << m.to_text();
    return 0;
  }
  const Mat3 m = eval_psi(w);
  std::cout << "word: " << (w.empty() ? "(empty)" : w.str()) << "\npsi:\n" << m.to_text();
  if (in_image_mod(m)) std::cout << "block: " << block_form(m).str() << "\n";
  if (m == Mat3::identity()) std::cout << "note: in ker Psi\n";
  return 0;
}

int cmd_lift(const std::string& text, long long k) {
  const Cover cover(k);
  const TwistWord w = word_parse(text);
  const Mat3 m = eval_psi(w);
  const BlockForm bf = block_form(m);  // throws with the failing condition
  const bool m_ok = bf.v.first % k == 0;
  const bool n_ok = bf.v.second % k == 0;
  std::cout << "word: " << (w.empty() ? "(empty)" : w.str()) << "\n"
            << "v = (" << bf.v.first << ", " << bf.v.second << ")\n"
            << k << " | " << bf.v.first << ": " << (m_ok ? "yes" : "no") << "\n"
            << k << " | " << bf.v.second << ": " << (n_ok ? "yes" : "no") << "\n"
            << (m_ok && n_ok ? "liftable" : "not liftable") << " under the " << k
            << "-sheeted cover\n";
  return 0;
}

void print_genset(const GenSet& gs) {
  const Cover cover(gs.k);
  for (const auto& [label, w] : gs.members)
    std::cout << label << ": " << (w.empty() ? "(empty)" : w.str())
              << (lift_test(w, cover) ? "  [lifts]" : "  [DOES NOT LIFT]") << "\n";
}

int cmd_gens(long long k, bool reduced) {
  const GenSet gs = reduced ? reduced_generating_set(k) : generating_set(k);
  std::cout << (reduced ? "reduced generating set" : "generating set") << " at k=" << k << " ("
            << gs.members.size() << " words)\n";
  print_genset(gs);
  return 0;
}

int cmd_index(long long k) {
  const CosetIndexResult ci = coset_index(k);
  std::cout << "k=" << k << " |image|=" << ci.order_full
            << " |liftable image|=" << ci.order_liftable << " index=" << ci.index
            << " (k^2=" << k * k << ")\n";
  return ci.index == static_cast<std::size_t>(k) * static_cast<std::size_t>(k) ? 0 : 1;
}

int cmd_maximal(const std::string& range) {
  const std::size_t dots = range.find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("--k-range", "expected A..B, e.g. 2..12");
  const long long lo = std::stoll(range.substr(0, dots));
  const long long hi = std::stoll(range.substr(dots + 2));
  if (lo < 2 || hi < lo) throw CLI::ValidationError("--k-range", "need 2 <= A <= B");
  for (long long k = lo; k <= hi; ++k) {
    const MaximalityResult r = is_maximal(k);
    std::cout << "k=" << k << ": " << (r.maximal ? "maximal" : "not maximal") << " — "
              << r.detail << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, const std::string& format) {
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names = {suite};
  int exit = 0;
  nlohmann::json out = nlohmann::json::array();
  for (const std::string& name : names) {
    const Report rep = run_suite(name, opt);
    if (format == "json")
      out.push_back(rep.to_json());
    else
      rep.print_text(std::cout);
    exit |= rep.exit_code();
  }
  if (format == "json") std::cout << out.dump(2) << "\n";
  return exit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations around the homology action of the twice-marked torus "
               "mapping class group and its liftable subgroups"};
  app.require_subcommand(1);

  std::string word_text;
  long long mod = 0;
  CLI::App* eval = app.add_subcommand("eval", "evaluate Psi on a twist word");
  eval->add_option("word", word_text, "twist word, e.g. \"a^2 b^-1 (b c)^6\"")->required();
  eval->add_option("--mod", mod, "reduce the image modulo k")->check(CLI::Range(2LL, 1000000000LL));

  std::string lift_text;
  long long lift_k = 0;
  CLI::App* lift = app.add_subcommand("lift", "decide liftability under the k-sheeted cover");
  lift->add_option("word", lift_text, "twist word")->required();
  lift->add_option("--k", lift_k, "cover index")->required()->check(CLI::Range(2LL, 1000000000LL));

  std::string suite;
  std::string format = "text";
  SuiteOptions opt;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "relations|eq1|eq2|prop42|kernel|paper-matrices|schreier|all")
      ->required()
      ->check(CLI::IsMember(
          {"relations", "eq1", "eq2", "prop42", "kernel", "paper-matrices", "schreier", "all"}));
  verify->add_option("--k", opt.k, "cover index (schreier)")->check(CLI::Range(2LL, 64LL));
  verify->add_option("--window", opt.window, "kernel window M")->check(CLI::Range(0LL, 64LL));
  verify->add_option("--script", opt.script_path, "override rewrite script path");
  verify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  long long gens_k = 0;
  bool reduced = false;
  CLI::App* gens = app.add_subcommand("gens", "print a generating set for the liftable subgroup");
  gens->add_option("--k", gens_k, "cover index")->required()->check(CLI::Range(2LL, 10000LL));
  gens->add_flag("--reduced", reduced, "four-element set (k = 2, 3 only)");

  long long index_k = 0;
  CLI::App* index = app.add_subcommand("index", "coset index of the liftable image mod k");
  index->add_option("--k", index_k, "cover index")->required()->check(CLI::Range(2LL, 64LL));

  std::string k_range;
  CLI::App* maximal = app.add_subcommand("maximal", "maximality of the liftable subgroup");
  maximal->add_option("--k-range", k_range, "inclusive range A..B")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return cmd_eval(word_text, mod);
    if (lift->parsed()) return cmd_lift(lift_text, lift_k);
    if (verify->parsed()) return cmd_verify(suite, opt, format);
    if (gens->parsed()) return cmd_gens(gens_k, reduced);
    if (index->parsed()) return cmd_index(index_k);
    if (maximal->parsed()) return cmd_maximal(k_range);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
