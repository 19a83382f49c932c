#include "pw/io.hpp"

#include <algorithm>
#include <sstream>

namespace pw {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

struct Lines {
  std::vector<std::pair<int, std::string>> content;  // (line number, text)
  explicit Lines(const std::string& text) {
    int ln = 0;
    for (auto& raw : split(text, '\n')) {
      ++ln;
      auto s = raw;
      const auto hash = s.find('#');
      if (hash != std::string::npos) s = s.substr(0, hash);
      s = trim(s);
      if (!s.empty()) content.emplace_back(ln, s);
    }
  }
};

}  // namespace

RuleSpec parse_rule(const std::string& text, int m) {
  std::istringstream in(trim(text));
  std::string kind;
  in >> kind;
  if (kind == "plurality") return RuleSpec::scoring(ScoreVector::plurality(m));
  if (kind == "veto") return RuleSpec::scoring(ScoreVector::veto(m));
  if (kind == "borda") return RuleSpec::scoring(ScoreVector::borda(m));
  if (kind == "maximin") return RuleSpec::maximin();
  if (kind == "bucklin") return RuleSpec::bucklin();
  if (kind == "kapproval" || kind == "kveto") {
    int k;
    if (!(in >> k)) throw Error(kind + " needs a parameter k");
    return RuleSpec::scoring(kind == "kapproval" ? ScoreVector::k_approval(k, m)
                                                 : ScoreVector::k_veto(k, m));
  }
  if (kind == "scoring") {
    std::vector<long long> raw;
    long long v;
    while (in >> v) raw.push_back(v);
    if (static_cast<int>(raw.size()) != m)
      throw Error("scoring vector must list exactly m entries");
    return RuleSpec::scoring(ScoreVector::normalize(std::move(raw)));
  }
  if (kind == "copeland") {
    std::string frac;
    if (!(in >> frac)) throw Error("copeland needs alpha as <p>/<q>");
    const auto slash = frac.find('/');
    if (slash == std::string::npos) throw Error("copeland alpha must be p/q");
    return RuleSpec::copeland(std::stoll(frac.substr(0, slash)),
                              std::stoll(frac.substr(slash + 1)));
  }
  throw Error("unknown rule: " + kind);
}

PossibleWinnerInstance parse_instance(const std::string& text) {
  Lines lines(text);
  CandidateSet cands;
  std::string rule_text, target_label;
  std::vector<std::pair<int, std::string>> vote_lines;
  bool have_cands = false;

  for (auto& [ln, s] : lines.content) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'key: value'", ln);
    const std::string key = trim(s.substr(0, colon));
    const std::string val = trim(s.substr(colon + 1));
    if (key == "candidates") {
      if (have_cands) throw ParseError("duplicate candidates line", ln);
      std::vector<std::string> labels;
      for (auto& piece : split(val, ',')) {
        const auto lab = trim(piece);
        if (lab.empty()) throw ParseError("empty candidate label", ln);
        labels.push_back(lab);
      }
      try {
        cands = CandidateSet(labels);
      } catch (const Error& e) {
        throw ParseError(e.what(), ln);
      }
      have_cands = true;
    } else if (key == "rule") {
      rule_text = val;
    } else if (key == "target") {
      target_label = val;
    } else if (key == "vote") {
      vote_lines.emplace_back(ln, val);
    } else {
      throw ParseError("unknown key: " + key, ln);
    }
  }
  if (!have_cands) throw ParseError("missing candidates line", 0);
  if (rule_text.empty()) throw ParseError("missing rule line", 0);
  if (target_label.empty()) throw ParseError("missing target line", 0);

  PossibleWinnerInstance inst;
  inst.profile.candidates = cands;
  const auto target = cands.find(target_label);
  if (!target) throw ParseError("target is not a candidate: " + target_label, 0);
  inst.target = *target;
  try {
    inst.rule = parse_rule(rule_text, cands.size());
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }

  for (auto& [ln, val] : vote_lines) {
    std::vector<std::pair<CandidateId, CandidateId>> pairs;
    if (!trim(val).empty()) {
      for (auto& piece : split(val, ',')) {
        const auto pair_text = trim(piece);
        const auto gt = pair_text.find('>');
        if (gt == std::string::npos)
          throw ParseError("expected 'x>y' pair: " + pair_text, ln);
        const auto xl = trim(pair_text.substr(0, gt));
        const auto yl = trim(pair_text.substr(gt + 1));
        const auto x = cands.find(xl), y = cands.find(yl);
        if (!x) throw ParseError("unknown candidate: " + xl, ln);
        if (!y) throw ParseError("unknown candidate: " + yl, ln);
        pairs.emplace_back(*x, *y);
      }
    }
    try {
      inst.profile.votes.push_back(Vote::partial(
          PartialOrder::close_and_validate(cands.size(), pairs)));
    } catch (const CycleError& e) {
      throw ParseError(e.what(), ln);
    }
  }
  return inst;
}

static std::string rule_to_text(const RuleSpec& rule, int m) {
  switch (rule.kind) {
    case RuleSpec::Kind::Scoring: {
      const auto& sv = *rule.score_vector;
      if (sv == ScoreVector::borda(m)) return "borda";
      if (sv == ScoreVector::plurality(m)) return "plurality";
      if (sv == ScoreVector::veto(m)) return "veto";
      for (int k = 2; k < m; ++k)
        if (sv == ScoreVector::k_approval(k, m))
          return "kapproval " + std::to_string(k);
      std::string out = "scoring";
      for (auto v : sv.scores) out += " " + std::to_string(v);
      return out;
    }
    case RuleSpec::Kind::Copeland:
      return "copeland " + std::to_string(rule.alpha_num) + "/" +
             std::to_string(rule.alpha_den);
    case RuleSpec::Kind::Maximin:
      return "maximin";
    case RuleSpec::Kind::Bucklin:
      return "bucklin";
  }
  throw Error("unknown rule kind");
}

std::string emit_instance(const PossibleWinnerInstance& inst) {
  const auto& cands = inst.profile.candidates;
  std::ostringstream out;
  out << "candidates:";
  for (int c = 0; c < cands.size(); ++c)
    out << (c ? ", " : " ") << cands.label(c);
  out << "\n";
  out << "rule: " << rule_to_text(inst.rule, cands.size()) << "\n";
  out << "target: " << cands.label(inst.target) << "\n";
  for (const auto& vote : inst.profile.votes) {
    out << "vote:";
    bool first = true;
    if (vote.is_complete()) {
      const auto& r = vote.linear().ranking;
      for (size_t i = 0; i + 1 < r.size(); ++i) {
        out << (first ? " " : ", ") << cands.label(r[i]) << ">"
            << cands.label(r[i + 1]);
        first = false;
      }
    } else {
      for (auto [x, y] : vote.order().strict_pairs()) {
        out << (first ? " " : ", ") << cands.label(x) << ">" << cands.label(y);
        first = false;
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string emit_gadget(const Gadget& g) {
  std::ostringstream out;
  out << "# reduction: " << g.reduction << "\n";
  out << "# regime: " << g.regime << "\n";
  out << "# max-undetermined-pairs: " << g.max_pairs << "\n";
  for (size_t vi = 0; vi < g.vote_roles.size(); ++vi)
    out << "# vote " << vi << ": " << g.vote_roles[vi] << "\n";
  out << emit_instance(g.instance);
  return out.str();
}

Sat3B2Instance parse_sat(const std::string& text) {
  Lines lines(text);
  Sat3B2Instance s;
  bool have_header = false;
  for (auto& [ln, str] : lines.content) {
    std::istringstream in(str);
    std::string key;
    in >> key;
    if (key == "sat") {
      if (!(in >> s.n_vars)) throw ParseError("sat header needs n", ln);
      have_header = true;
    } else if (key == "clause:") {
      std::array<int, 3> cl{};
      if (!(in >> cl[0] >> cl[1] >> cl[2]))
        throw ParseError("clause needs three literals", ln);
      s.clauses.push_back(cl);
    } else {
      throw ParseError("unknown sat line: " + key, ln);
    }
  }
  if (!have_header) throw ParseError("missing sat header", 0);
  return s;
}

ThreeDMInstance parse_3dm(const std::string& text) {
  Lines lines(text);
  ThreeDMInstance t;
  bool have_header = false;
  for (auto& [ln, str] : lines.content) {
    std::istringstream in(str);
    std::string key;
    in >> key;
    if (key == "3dm") {
      if (!(in >> t.m)) throw ParseError("3dm header needs m", ln);
      have_header = true;
    } else if (key == "triple:") {
      std::array<int, 3> tr{};
      if (!(in >> tr[0] >> tr[1] >> tr[2]))
        throw ParseError("triple needs three elements", ln);
      for (auto& v : tr) --v;  // 1-based in the file
      t.triples.push_back(tr);
    } else {
      throw ParseError("unknown 3dm line: " + key, ln);
    }
  }
  if (!have_header) throw ParseError("missing 3dm header", 0);
  return t;
}

MulticoloredISInstance parse_mis(const std::string& text) {
  Lines lines(text);
  MulticoloredISInstance g;
  bool have_header = false;
  for (auto& [ln, str] : lines.content) {
    std::istringstream in(str);
    std::string key;
    in >> key;
    if (key == "mis") {
      if (!(in >> g.d)) throw ParseError("mis header needs d", ln);
      have_header = true;
    } else if (key == "class:") {
      std::vector<int> cls;
      int v;
      while (in >> v) cls.push_back(v - 1);
      if (cls.empty()) throw ParseError("empty class", ln);
      g.classes.push_back(std::move(cls));
    } else if (key == "edge:") {
      int a, b;
      if (!(in >> a >> b)) throw ParseError("edge needs two vertices", ln);
      g.edges.emplace_back(a - 1, b - 1);
    } else {
      throw ParseError("unknown mis line: " + key, ln);
    }
  }
  if (!have_header) throw ParseError("missing mis header", 0);
  return g;
}

std::string emit_sat(const Sat3B2Instance& s) {
  std::ostringstream out;
  out << "sat " << s.n_vars << "\n";
  for (const auto& cl : s.clauses)
    out << "clause: " << cl[0] << " " << cl[1] << " " << cl[2] << "\n";
  return out.str();
}

std::string emit_3dm(const ThreeDMInstance& t) {
  std::ostringstream out;
  out << "3dm " << t.m << "\n";
  for (const auto& tr : t.triples)
    out << "triple: " << tr[0] + 1 << " " << tr[1] + 1 << " " << tr[2] + 1
        << "\n";
  return out.str();
}

std::string emit_mis(const MulticoloredISInstance& g) {
  std::ostringstream out;
  out << "mis " << g.d << "\n";
  for (const auto& cls : g.classes) {
    out << "class:";
    for (int v : cls) out << " " << v + 1;
    out << "\n";
  }
  for (auto [a, b] : g.edges) out << "edge: " << a + 1 << " " << b + 1 << "\n";
  return out.str();
}

std::string format_report(const SolveResult& res, const CandidateSet& cands,
                          long long time_ms) {
  std::ostringstream out;
  out << "answer: " << (res.yes ? "YES" : "NO") << "\n";
  out << "method: " << res.method << "\n";
  out << "regime: " << res.regime << "\n";
  if (res.witness) {
    out << "witness:\n";
    for (const auto& vote : res.witness->votes) {
      out << " ";
      const auto& r = vote.linear().ranking;
      for (size_t i = 0; i < r.size(); ++i)
        out << (i ? ">" : " ") << cands.label(r[i]);
      out << "\n";
    }
  }
  out << "time_ms: " << time_ms << "\n";
  return out.str();
}

}  // namespace pw
