#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pw/io.hpp"
#include "pw/score_analysis.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pw::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw pw::Error("cannot write " + path);
  out << text;
}

unsigned long long default_budget() {
  if (const char* env = std::getenv("PW_BUDGET")) {
    const long long v = std::atoll(env);
    if (v > 0) return static_cast<unsigned long long>(v);
  }
  return pw::kDefaultBudget;
}

// The differentiating smooth family used for generated instances:
// (4, 3, 1, 1, 0, ..., 0).
pw::ScoreVector differentiating_vector(int m) {
  if (m < 5) throw pw::Error("differentiating family needs m >= 5");
  std::vector<long long> raw(m, 0);
  raw[0] = 4;
  raw[1] = 3;
  raw[2] = 1;
  raw[3] = 1;
  return pw::ScoreVector::normalize(std::move(raw));
}

// A <1,1>- and <1,0,1>-contaminated-free test family would be k-approval;
// for the <1,0,1> gadget we use (2, ..., 2, 1, 1, 0).
pw::ScoreVector one_zero_one_vector(int m) {
  if (m < 4) throw pw::Error("(2,...,2,1,1,0) needs m >= 4");
  std::vector<long long> raw(m, 2);
  raw[m - 3] = 1;
  raw[m - 2] = 1;
  raw[m - 1] = 0;
  return pw::ScoreVector::normalize(std::move(raw));
}

int run_solve(const std::string& path, const std::string& method,
              unsigned long long budget, bool unique) {
  const auto inst = pw::parse_instance(read_file(path));
  const auto start = std::chrono::steady_clock::now();
  pw::SolveResult res;
  if (method == "brute" || unique) {
    res = pw::solve_bruteforce(inst, budget, unique);
  } else if (method == "flow") {
    auto [route, regime] = pw::dispatch_route(inst);
    if (route == "brute-force")
      throw pw::PreconditionViolated(
          "no polynomial solver covers this instance (regime " + regime + ")");
    res = pw::dispatch(inst, budget);
  } else {
    res = pw::dispatch(inst, budget);
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::cout << pw::format_report(res, inst.profile.candidates, ms);
  return res.yes ? 0 : 1;
}

int run_classify(const std::string& rule_text, int m) {
  const auto rule = pw::parse_rule(rule_text, m);
  std::string label, threshold, tag;
  switch (rule.kind) {
    case pw::RuleSpec::Kind::Scoring: {
      const auto cls = pw::classify(*rule.score_vector);
      label = pw::to_string(cls.label);
      if (!cls.hard_threshold) {
        threshold = "none";
        tag = "poly(all-t-known)";
      } else {
        threshold = std::to_string(*cls.hard_threshold);
        if (cls.threshold_is_m_minus_1) threshold += " (= m-1)";
        switch (cls.label) {
          case pw::RuleClassLabel::Differentiating:
            tag = "np-hard(differentiating,t>=1)";
            break;
          case pw::RuleClassLabel::OneOneContaminated:
            tag = "np-hard(11-contaminated,t>=2)";
            break;
          case pw::RuleClassLabel::OneZeroOneContaminated:
            tag = "np-hard(101-contaminated,t>=3)";
            break;
          case pw::RuleClassLabel::ZeroOneZeroContaminated:
            tag = "np-hard(010-contaminated,t>=4)";
            break;
          default:
            tag = "np-hard(two-one-ones-zero,t>=m-1)";
            break;
        }
      }
      break;
    }
    case pw::RuleSpec::Kind::Copeland: {
      const bool boundary =
          rule.alpha_num == 0 || rule.alpha_num == rule.alpha_den;
      label = boundary ? "copeland-boundary-alpha" : "copeland-interior-alpha";
      threshold = boundary ? "2" : "1";
      tag = boundary ? "np-hard(copeland-boundary-alpha,t>=2)"
                     : "np-hard(copeland-interior-alpha,t>=1)";
      break;
    }
    case pw::RuleSpec::Kind::Maximin:
      label = "maximin";
      threshold = "2";
      tag = "np-hard(maximin,t>=2)";
      break;
    case pw::RuleSpec::Kind::Bucklin:
      label = "bucklin";
      threshold = "2";
      tag = "np-hard(bucklin,t>=2)";
      break;
  }
  std::cout << "class: " << label << "\n";
  std::cout << "hard-threshold: " << threshold << "\n";
  std::cout << "tag: " << tag << "\n";
  return 0;
}

int run_gadget(const std::string& path, const std::string& reduction,
               const std::string& rule_text, const std::string& alpha,
               long long lambda, bool verify, const std::string& out_path,
               unsigned long long budget) {
  const auto text = read_file(path);
  pw::Gadget g;
  auto alpha_pq = [&]() {
    const auto slash = alpha.find('/');
    if (slash == std::string::npos)
      throw pw::Error("--alpha must look like p/q");
    return std::make_pair(std::stoll(alpha.substr(0, slash)),
                          std::stoll(alpha.substr(slash + 1)));
  };
  if (reduction == "scoring-differentiating-sat") {
    const auto sat = pw::parse_sat(text);
    const int m = 2 * sat.n_vars + sat.n_clauses() + 2;
    const auto sv = rule_text.empty()
                        ? differentiating_vector(m)
                        : *pw::parse_rule(rule_text, m).score_vector;
    g = pw::gadget_scoring_differentiating(sat, sv);
  } else if (reduction == "scoring-11-3dm") {
    const auto tdm = pw::parse_3dm(text);
    const int m = 3 * tdm.m + 2;
    const auto sv = rule_text.empty()
                        ? pw::ScoreVector::borda(m)
                        : *pw::parse_rule(rule_text, m).score_vector;
    g = pw::gadget_scoring_11(tdm, sv);
  } else if (reduction == "scoring-101-3dm") {
    const auto tdm = pw::parse_3dm(text);
    const int m = 3 * tdm.m + 2;
    const auto sv = rule_text.empty()
                        ? one_zero_one_vector(m)
                        : *pw::parse_rule(rule_text, m).score_vector;
    g = pw::gadget_scoring_101(tdm, sv);
  } else if (reduction == "scoring-2110-sat") {
    g = pw::gadget_2110(pw::parse_sat(text));
  } else if (reduction == "copeland-3dm") {
    g = pw::gadget_copeland_3dm(pw::parse_3dm(text));
  } else if (reduction == "copeland-sat-low") {
    const auto [p, q] = alpha_pq();
    g = pw::gadget_copeland_sat_low(pw::parse_sat(text), p, q);
  } else if (reduction == "copeland-sat-high") {
    const auto [p, q] = alpha_pq();
    g = pw::gadget_copeland_sat_high(pw::parse_sat(text), p, q);
  } else if (reduction == "maximin-mis") {
    g = pw::gadget_maximin(pw::parse_mis(text), lambda);
  } else if (reduction == "bucklin-3dm") {
    g = pw::gadget_bucklin(pw::parse_3dm(text));
  } else {
    throw pw::Error("unknown reduction: " + reduction);
  }
  write_output(out_path, pw::emit_gadget(g));
  std::cerr << "candidates: " << g.instance.profile.m()
            << "  votes: " << g.instance.profile.n()
            << "  max-pairs: " << g.instance.profile.max_undetermined_pairs()
            << "\n";
  if (verify) {
    bool source_yes = false;
    if (auto* sat = std::get_if<pw::Sat3B2Instance>(&g.source))
      source_yes = sat->brute_solve().has_value();
    else if (auto* tdm = std::get_if<pw::ThreeDMInstance>(&g.source))
      source_yes = tdm->brute_solve().has_value();
    else
      source_yes =
          std::get<pw::MulticoloredISInstance>(g.source).brute_solve().has_value();
    try {
      const auto res = pw::solve_bruteforce(g.instance, budget);
      std::cout << "source-answer: " << (source_yes ? "YES" : "NO") << "\n";
      std::cout << "pw-answer: " << (res.yes ? "YES" : "NO") << "\n";
      std::cout << "equivalent: " << (res.yes == source_yes ? "yes" : "NO")
                << "\n";
      if (res.yes != source_yes) return 2;
    } catch (const pw::BudgetExceeded&) {
      std::cout << "source-answer: " << (source_yes ? "YES" : "NO") << "\n";
      std::cout << "pw-answer: skipped (extension product above budget)\n";
    }
  }
  return 0;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

int run_build_scores(const std::string& cand_list, const std::string& vec,
                     const std::string& named, const std::string& dummies,
                     const std::string& out_path) {
  std::vector<std::string> labels = split_commas(cand_list);
  pw::CandidateSet cands(labels);
  std::vector<long long> raw;
  for (auto& s : split_commas(vec)) raw.push_back(std::stoll(s));
  const auto sv = pw::ScoreVector::normalize(raw);
  pw::ScoreTarget target;
  for (auto& item : split_commas(named)) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw pw::Error("--named wants label=offset");
    const auto who = cands.find(item.substr(0, eq));
    if (!who) throw pw::Error("unknown candidate in --named");
    target.named.emplace_back(*who, std::stoll(item.substr(eq + 1)));
  }
  for (auto& d : split_commas(dummies)) {
    const auto who = cands.find(d);
    if (!who) throw pw::Error("unknown candidate in --dummies");
    target.dummies.push_back(*who);
  }
  const auto built = pw::build_score_profile(sv, cands, target);
  pw::PossibleWinnerInstance inst;
  inst.profile = built.profile;
  inst.target = target.named.empty() ? 0 : target.named[0].first;
  inst.rule = pw::RuleSpec::scoring(sv);
  write_output(out_path, pw::emit_instance(inst));
  const auto scores = pw::positional_scores(sv, built.profile);
  std::cout << "lambda: " << built.lambda << "\n";
  for (int c = 0; c < cands.size(); ++c)
    std::cout << "score " << cands.label(c) << ": " << scores[c] << "\n";
  return 0;
}

int run_build_margins(const std::string& cand_list,
                      const std::vector<std::string>& sets,
                      const std::string& out_path) {
  pw::CandidateSet cands(split_commas(cand_list));
  pw::MarginTarget target(cands.size());
  for (const auto& item : sets) {
    const auto parts = split_commas(item);
    if (parts.size() != 3) throw pw::Error("--set wants x,y,margin");
    const auto x = cands.find(parts[0]), y = cands.find(parts[1]);
    if (!x || !y) throw pw::Error("unknown candidate in --set");
    target.set(*x, *y, std::stoll(parts[2]));
  }
  const auto profile = pw::build_margin_profile(cands, target);
  pw::PossibleWinnerInstance inst;
  inst.profile = profile;
  inst.target = 0;
  inst.rule = pw::RuleSpec::maximin();
  write_output(out_path, pw::emit_instance(inst));
  const auto d = pw::margin_matrix(profile);
  for (int x = 0; x < cands.size(); ++x)
    for (int y = x + 1; y < cands.size(); ++y)
      std::cout << "margin " << cands.label(x) << " over " << cands.label(y)
                << ": " << d.at(x, y) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Possible Winner solver toolkit"};
  app.require_subcommand(1);

  std::string path, method = "auto", out_path;
  unsigned long long budget = default_budget();
  bool unique = false;
  int jobs = 1;
  auto* solve = app.add_subcommand("solve", "decide a possible-winner instance");
  solve->add_option("file", path, "instance file")->required();
  solve->add_option("--method", method, "auto|brute|flow")
      ->check(CLI::IsMember({"auto", "brute", "flow"}));
  solve->add_option("--budget", budget, "brute-force extension budget");
  solve->add_flag("--unique", unique, "require a unique winner (brute force)");
  solve->add_option("--jobs", jobs,
                    "worker count (accepted; the oracle is deterministic and "
                    "currently single-threaded)");

  std::string rule_text;
  int m = 0;
  auto* classify = app.add_subcommand("classify", "rule dichotomy lookup");
  classify->add_option("rule", rule_text, "rule spec, e.g. 'borda'")->required();
  classify->add_option("-m,--candidates", m, "candidate count")->required();

  std::string reduction, alpha = "1/2";
  long long lambda = 0;
  bool verify = false;
  auto* gadget = app.add_subcommand("gadget", "generate a hardness gadget");
  gadget->add_option("file", path, "source instance file")->required();
  gadget->add_option("--reduction", reduction, "which construction")->required();
  gadget->add_option("--rule", rule_text, "score vector override");
  gadget->add_option("--alpha", alpha, "copeland alpha p/q");
  gadget->add_option("--lambda", lambda, "maximin margin scale");
  gadget->add_flag("--verify", verify, "dual brute-force check when affordable");
  gadget->add_option("-o,--output", out_path, "write the instance here");
  gadget->add_option("--budget", budget, "verification budget");

  auto* build = app.add_subcommand("build", "construct exact profiles");
  std::string cand_list, vec, named, dummies;
  std::vector<std::string> sets;
  auto* scores = build->add_subcommand("scores", "profile with exact scores");
  scores->add_option("--candidates", cand_list)->required();
  scores->add_option("--vector", vec)->required();
  scores->add_option("--named", named)->required();
  scores->add_option("--dummies", dummies)->required();
  scores->add_option("-o,--output", out_path);
  auto* margins = build->add_subcommand("margins", "profile with exact margins");
  margins->add_option("--candidates", cand_list)->required();
  margins->add_option("--set", sets, "x,y,margin (repeatable)");
  margins->add_option("-o,--output", out_path);
  build->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return run_solve(path, method, budget, unique);
    if (*classify) return run_classify(rule_text, m);
    if (*gadget)
      return run_gadget(path, reduction, rule_text, alpha, lambda, verify,
                        out_path, budget);
    if (*build) {
      if (*scores) return run_build_scores(cand_list, vec, named, dummies, out_path);
      return run_build_margins(cand_list, sets, out_path);
    }
  } catch (const pw::ParseError& e) {
    std::cerr << "parse error (line " << e.line << "): " << e.what() << "\n";
    return 2;
  } catch (const pw::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (product " << e.product << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
