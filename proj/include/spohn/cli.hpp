#pragma once

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spohn/document.hpp"
#include "spohn/spohn.hpp"

namespace spohn::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kViolation = 2, kGuardExceeded = 3 };

struct Options {
  std::string command;
  std::string input;
  bool normalize = false;
  bool densify = false;
  std::string eps;
  std::string evidence;
  std::string mode = "conditioning";
  int precision = 4;
  std::size_t max_n = oracle::kDefaultMaxWorlds;
  std::string format = "table";
  int theorem = 0;
  std::uint64_t seed = 1;
  std::size_t n = 4;
  std::string strata;
  std::size_t workers = 1;
};

namespace detail {

using Json = nlohmann::ordered_json;

// Column-aligned plain-text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      os << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

class Session {
 public:
  Session(const Options& opts, std::istream& in, std::ostream& out) : opts_(opts), in_(in), out_(out) {}

  int dispatch() {
    const auto& c = opts_.command;
    check_flags();
    if (c == "to-kappa") return to_kappa();
    if (c == "to-prob") return to_prob(false);
    if (c == "to-prob-exp") return to_prob(true);
    if (c == "eps-rule") return eps_rule();
    if (c == "condition") return condition();
    if (c == "image") return image();
    if (c == "densify") return densify();
    if (c == "bounds") return bounds();
    if (c == "threshold") return threshold();
    if (c == "check") return check();
    if (c == "roundtrip") return roundtrip();
    throw Error(Errc::invalid_argument, "unknown command '" + c + "'");
  }

 private:
  bool json() const { return opts_.format == "json"; }

  std::string dec(const Rational& r) const { return r.to_decimal(opts_.precision); }

  Json rat(const Rational& r) const { return Json{{"exact", r.to_fraction()}, {"decimal", dec(r)}}; }

  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }

  // Rejects flags that the command would silently ignore.
  void check_flags() const {
    const auto& c = opts_.command;
    auto only = [&](bool used, const char* flag, std::initializer_list<const char*> commands) {
      if (!used) return;
      for (const char* allowed : commands)
        if (c == allowed) return;
      throw Error(Errc::invalid_argument, std::string(flag) + " does not apply to '" + c + "'");
    };
    only(!opts_.eps.empty(), "--eps", {"eps-rule", "check"});
    only(!opts_.evidence.empty(), "--evidence", {"condition", "image", "check"});
    only(opts_.mode != "conditioning", "--mode", {"check"});
    only(opts_.theorem != 0, "--theorem", {"check"});
    only(!opts_.strata.empty(), "--strata", {"to-prob", "to-prob-exp", "bounds", "threshold", "roundtrip", "check"});
    if (!opts_.strata.empty() && !opts_.input.empty())
      throw Error(Errc::invalid_argument, "--strata and an input document are mutually exclusive");
  }

  DocumentModel& document() {
    if (!doc_) doc_ = parse_input(opts_.input, in_);
    return *doc_;
  }

  ProbDist distribution() {
    if (opts_.densify) throw Error(Errc::invalid_argument, "--densify applies to ranking documents");
    return to_distribution(document(), opts_.normalize);
  }

  RankingFunction ranking() {
    if (!opts_.strata.empty()) return RankingFunction::from_strata(parse_strata(opts_.strata));
    if (opts_.normalize) throw Error(Errc::invalid_argument, "--normalize applies to probability documents");
    return to_ranking(document(), opts_.densify);
  }

  static StrataVector parse_strata(const std::string& text) {
    std::vector<std::size_t> counts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        throw Error(Errc::parse, "--strata expects comma-separated counts, got '" + text + "'");
      counts.push_back(std::stoull(part));
    }
    if (counts.empty() || counts.front() == 0)
      throw Error(Errc::validation, "--strata needs k_0 >= 1");
    return StrataVector(std::move(counts));
  }

  Event evidence(const WorldSpace& space) {
    std::vector<std::string> labels;
    if (!opts_.evidence.empty()) {
      std::stringstream ss(opts_.evidence);
      std::string label;
      while (std::getline(ss, label, ','))
        if (!label.empty()) labels.push_back(label);
    } else if (doc_ && doc_->evidence) {
      labels = *doc_->evidence;
    } else {
      throw Error(Errc::invalid_argument, "'" + opts_.command + "' needs --evidence or an \"evidence\" key");
    }
    auto event = subset_by_labels(space, labels);
    if (event.is_empty()) throw Error(Errc::empty_evidence, "evidence event is empty");
    return event;
  }

  bool has_evidence() const { return !opts_.evidence.empty() || (doc_ && doc_->evidence); }

  Rational epsilon() {
    std::string text = opts_.eps;
    if (text.empty() && doc_ && doc_->eps) text = *doc_->eps;
    if (text.empty()) throw Error(Errc::invalid_argument, "the epsilon rule needs --eps or an \"eps\" key");
    auto eps = Rational::parse(text);
    transform::require_epsilon(eps);
    return eps;
  }

  std::string rank_list(const RankingFunction& delta) const {
    std::string out;
    for (std::size_t w = 0; w < delta.size(); ++w)
      out += (w ? " " : "") + delta.space().label(w) + "=" + std::to_string(delta.rank(w));
    return out;
  }

  Json ranks_json(const RankingFunction& delta) const {
    Json j = Json::object();
    for (std::size_t w = 0; w < delta.size(); ++w) j[delta.space().label(w)] = delta.rank(w);
    return j;
  }

  Json masses_json(const WorldSpace& space, std::span<const Rational> masses) const {
    Json j = Json::object();
    for (std::size_t w = 0; w < masses.size(); ++w) j[space.label(w)] = rat(masses[w]);
    return j;
  }

  int to_kappa() {
    auto p = distribution();
    auto trace = transform::trace_to_kappa(p);
    if (json()) {
      Json steps = Json::array();
      for (std::size_t i = 0; i < trace.order.size(); ++i)
        steps.push_back({{"i", i + 1},
                         {"world", p.space().label(trace.order[i])},
                         {"p", rat(trace.sorted_masses[i])},
                         {"M", rat(trace.remaining[i])},
                         {"delta", trace.sorted_ranks[i]}});
      emit({{"command", "to-kappa"},
            {"steps", steps},
            {"leap_indices", trace.leaps.positions},
            {"levels", oracle::coarseness_levels(trace.ranking)},
            {"ranks", ranks_json(trace.ranking)}});
      return kOk;
    }
    Table t({"i", "world", "p_i", "M_i", "delta_i", "p_i exact", "M_i exact"});
    for (std::size_t i = 0; i < trace.order.size(); ++i)
      t.add({std::to_string(i + 1), p.space().label(trace.order[i]), dec(trace.sorted_masses[i]),
             dec(trace.remaining[i]), std::to_string(trace.sorted_ranks[i]), trace.sorted_masses[i].to_fraction(),
             trace.remaining[i].to_fraction()});
    t.print(out_);
    out_ << "leap indices: {";
    for (std::size_t i = 0; i < trace.leaps.positions.size(); ++i)
      out_ << (i ? "," : "") << trace.leaps.positions[i];
    out_ << "}\nlevels: " << oracle::coarseness_levels(trace.ranking) << '\n';
    out_ << "ranks: " << rank_list(trace.ranking) << '\n';
    return kOk;
  }

  int to_prob(bool exponential) {
    auto delta = ranking();
    auto strata = strata_of(delta);
    auto weights = exponential ? transform::exponential_weights(strata) : transform::congruent_weights(strata);
    auto p = exponential ? transform::to_prob_exponential(delta) : transform::to_prob(delta);
    const char* name = exponential ? "to-prob-exp" : "to-prob";
    if (json()) {
      Json levels = Json::array();
      for (Rank r = 0; r <= strata.max_rank(); ++r)
        levels.push_back({{"rank", r}, {"k", strata.count(r)}, {"u", rat(weights.unnormalized[r])},
                          {"p", rat(weights.mass(r))}});
      emit({{"command", name},
            {"strata", strata.counts()},
            {"levels", levels},
            {"Z", rat(weights.normalizer)},
            {"Z_inverse", rat(weights.normalizer.reciprocal())},
            {"masses", masses_json(p.space(), p.masses())}});
      return kOk;
    }
    Table levels({"rank", "k", "u", "p", "u exact", "p exact"});
    for (Rank r = 0; r <= strata.max_rank(); ++r)
      levels.add({std::to_string(r), std::to_string(strata.count(r)), dec(weights.unnormalized[r]),
                  dec(weights.mass(r)), weights.unnormalized[r].to_fraction(), weights.mass(r).to_fraction()});
    levels.print(out_);
    out_ << "Z = " << dec(weights.normalizer) << " (" << weights.normalizer.to_fraction() << "), 1/Z = "
         << dec(weights.normalizer.reciprocal()) << " (" << weights.normalizer.reciprocal().to_fraction() << ")\n\n";
    Table worlds({"world", "rank", "p", "p exact"});
    for (std::size_t w = 0; w < p.size(); ++w)
      worlds.add({p.space().label(w), std::to_string(delta.rank(w)), dec(p.mass(w)), p.mass(w).to_fraction()});
    worlds.print(out_);
    return kOk;
  }

  int eps_rule() {
    auto p = distribution();
    auto eps = epsilon();
    auto raw = transform::epsilon_exponents(p, eps);
    auto delta = transform::epsilon_rule(p, eps);
    if (json()) {
      Json rows = Json::array();
      for (std::size_t w = 0; w < p.size(); ++w)
        rows.push_back({{"world", p.space().label(w)}, {"p", rat(p.mass(w))}, {"k", raw[w]}, {"delta", delta.rank(w)}});
      emit({{"command", "eps-rule"}, {"eps", rat(eps)}, {"worlds", rows}});
      return kOk;
    }
    out_ << "eps = " << dec(eps) << " (" << eps.to_fraction() << ")\n";
    Table t({"world", "p", "k", "delta"});
    for (std::size_t w = 0; w < p.size(); ++w)
      t.add({p.space().label(w), dec(p.mass(w)), std::to_string(raw[w]), std::to_string(delta.rank(w))});
    t.print(out_);
    return kOk;
  }

  int condition() {
    auto& doc = document();
    if (doc.kind == DocumentKind::probability) {
      auto p = distribution();
      auto a = evidence(p.space());
      auto post = prob::condition(p, a);
      const auto& q = post.function;
      if (json()) {
        emit({{"command", "condition"}, {"kind", "probability"}, {"evidence", a.to_string(p.space())},
              {"masses", masses_json(q.space(), q.masses())}});
        return kOk;
      }
      out_ << "p(.|" << a.to_string(p.space()) << "), p(A) = " << dec(prob::prob_of_event(p, a)) << '\n';
      Table t({"world", "p", "p(.|A)", "p(.|A) exact"});
      for (std::size_t i = 0; i < q.size(); ++i)
        t.add({q.space().label(i), dec(p.mass(post.origin[i])), dec(q.mass(i)), q.mass(i).to_fraction()});
      t.print(out_);
      return kOk;
    }
    auto delta = ranking();
    auto a = evidence(delta.space());
    auto post = kappa::condition(delta, a);
    const auto& d = post.function;
    if (json()) {
      emit({{"command", "condition"}, {"kind", "ranking"}, {"evidence", a.to_string(delta.space())},
            {"ranks", ranks_json(d)}});
      return kOk;
    }
    out_ << "delta(.|" << a.to_string(delta.space()) << "), delta(A) = "
         << kappa::rank_of_event(delta, a).to_string() << '\n';
    Table t({"world", "delta", "delta(.|A)"});
    for (std::size_t i = 0; i < d.size(); ++i)
      t.add({d.space().label(i), std::to_string(delta.rank(post.origin[i])), std::to_string(d.rank(i))});
    t.print(out_);
    return kOk;
  }

  // Images a probability document under its "ranks" closeness (or T(p) when
  // absent), or S(δ) under δ for a ranking document.
  int image() {
    auto& doc = document();
    ProbDist p = doc.kind == DocumentKind::probability ? distribution() : transform::to_prob(ranking());
    RankingFunction closeness = [&] {
      if (doc.kind == DocumentKind::ranking) return ranking();
      if (doc.ranks) return RankingFunction::rebaselined(p.space(), *doc.ranks);
      return transform::to_kappa(p);
    }();
    auto a = evidence(p.space());
    auto imaged = prob::image(p, closeness, a);
    if (json()) {
      emit({{"command", "image"}, {"evidence", a.to_string(p.space())},
            {"closeness", ranks_json(closeness)}, {"masses", masses_json(p.space(), imaged.masses())}});
      return kOk;
    }
    out_ << "image on " << a.to_string(p.space()) << " (closeness |delta(w) - delta(w')|)\n";
    Table t({"world", "delta", "p", "image", "image exact"});
    for (std::size_t w = 0; w < p.size(); ++w)
      t.add({p.space().label(w), std::to_string(closeness.rank(w)), dec(p.mass(w)), dec(imaged.mass(w)),
             imaged.mass(w).to_fraction()});
    t.print(out_);
    return kOk;
  }

  int densify() {
    auto delta = ranking();
    auto dense = kappa::densify(delta);
    if (json()) {
      emit({{"command", "densify"}, {"was_dense", kappa::is_dense(delta)}, {"ranks", ranks_json(dense)}});
      return kOk;
    }
    Table t({"world", "delta", "D(delta)"});
    for (std::size_t w = 0; w < delta.size(); ++w)
      t.add({delta.space().label(w), std::to_string(delta.rank(w)), std::to_string(dense.rank(w))});
    t.print(out_);
    out_ << "input was " << (kappa::is_dense(delta) ? "dense" : "not dense") << '\n';
    return kOk;
  }

  int bounds() {
    auto strata = strata_of(ranking());
    auto z = transform::congruent_weights(strata).normalizer;
    if (json()) {
      Json rows = Json::array();
      for (Rank r = 0; r <= strata.max_rank(); ++r) {
        auto b = transform::probability_bounds(strata, r);
        rows.push_back({{"rank", r}, {"lo", rat(b.lo)}, {"hi", rat(b.hi)}});
      }
      emit({{"command", "bounds"}, {"strata", strata.counts()}, {"Z", rat(z)}, {"bounds", rows}});
      return kOk;
    }
    out_ << "events A with delta(A) = i satisfy lo <= S(delta)(A) < hi; Z = " << dec(z) << " (" << z.to_fraction()
         << ")\n";
    Table t({"i", "k_i", "lo", "hi", "lo exact", "hi exact"});
    for (Rank r = 0; r <= strata.max_rank(); ++r) {
      auto b = transform::probability_bounds(strata, r);
      t.add({std::to_string(r), std::to_string(strata.count(r)), dec(b.lo), dec(b.hi), b.lo.to_fraction(),
             b.hi.to_fraction()});
    }
    t.print(out_);
    return kOk;
  }

  int threshold() {
    auto strata = strata_of(ranking());
    auto th = transform::acceptance_threshold(strata);
    if (json()) {
      emit({{"command", "threshold"}, {"k0", strata.count(0)}, {"unnormalized", rat(th.unnormalized)},
            {"normalized", rat(th.normalized)}});
      return kOk;
    }
    Table t({"k_0", "unnormalized", "normalized", "unnormalized exact", "normalized exact"});
    t.add({std::to_string(strata.count(0)), dec(th.unnormalized), dec(th.normalized), th.unnormalized.to_fraction(),
           th.normalized.to_fraction()});
    t.print(out_);
    return kOk;
  }

  int roundtrip() {
    auto delta = ranking();
    auto p = transform::to_prob(delta);
    auto back = transform::to_kappa(p);
    auto dense = kappa::densify(delta);
    bool exact = back == dense;
    if (json()) {
      emit({{"command", "roundtrip"}, {"dense", kappa::is_dense(delta)}, {"holds", exact},
            {"S", masses_json(p.space(), p.masses())}, {"T_of_S", ranks_json(back)}});
      return exact ? kOk : kViolation;
    }
    Table t({"world", "delta", "S(delta)", "T(S(delta))", "D(delta)"});
    for (std::size_t w = 0; w < delta.size(); ++w)
      t.add({delta.space().label(w), std::to_string(delta.rank(w)), dec(p.mass(w)), std::to_string(back.rank(w)),
             std::to_string(dense.rank(w))});
    t.print(out_);
    out_ << "round trip T(S(delta)) = D(delta): " << (exact ? "holds" : "VIOLATED")
         << (kappa::is_dense(delta) ? " (delta is dense)" : " (delta is not dense)") << '\n';
    return exact ? kOk : kViolation;
  }

  // Runs the oracle checks that apply to the input and prints one line each.
  int check() {
    Json lines = Json::array();
    bool all_hold = true;
    auto report = [&](const std::string& name, bool holds, const std::string& detail) {
      all_hold = all_hold && holds;
      if (json()) lines.push_back({{"check", name}, {"holds", holds}, {"detail", detail}});
      else out_ << name << ": " << (holds ? "holds" : "VIOLATED") << ", " << detail << '\n';
    };
    oracle::Limits limits{opts_.max_n, 8, opts_.workers};

    auto congruence_line = [&](const std::string& name, const oracle::CongruenceReport& r, const WorldSpace& space) {
      std::string detail = std::to_string(r.pairs_checked) + " pairs checked";
      if (!r.holds) {
        const auto& v = r.violations.front();
        detail += ", " + std::to_string(r.violation_count) + " violations; first: A = " + v.first.to_string(space) +
                  " (p = " + dec(v.p_first) + ", delta = " + v.rank_first.to_string() + "), B = " +
                  v.second.to_string(space) + " (p = " + dec(v.p_second) + ", delta = " +
                  v.rank_second.to_string() + ")";
      }
      report(name, r.holds, detail);
    };

    int theorem = opts_.theorem;
    // Theorem 1 without an input path draws a random distribution; pass "-"
    // to read a document from stdin instead.
    const bool random = theorem == 1 && opts_.input.empty();
    const bool probabilistic =
        theorem == 1 || (theorem == 0 && opts_.strata.empty() && document().kind == DocumentKind::probability);

    if (probabilistic) {
      ProbDist p = [&] {
        if (random) {
          std::mt19937_64 rng(opts_.seed);
          return oracle::random_distribution(opts_.n, rng);
        }
        return distribution();
      }();
      bool use_eps = !opts_.eps.empty() || (doc_ && doc_->eps);
      auto delta = use_eps ? transform::epsilon_rule(p, epsilon()) : transform::to_kappa(p);
      if (random) {
        std::string masses;
        for (std::size_t w = 0; w < p.size(); ++w) masses += (w ? " " : "") + p.mass(w).to_fraction();
        if (!json()) out_ << "random distribution (seed " << opts_.seed << ", n = " << opts_.n << "): " << masses << '\n';
      }
      congruence_line(use_eps ? "congruence I (epsilon rule)" : "congruence I (T)",
                      oracle::check_congruence_I(p, delta, limits), p.space());
      if (!use_eps) {
        auto lc = oracle::check_least_coarse(p);
        report("least coarse (levels = |L_p| + 1)", lc.holds,
               std::to_string(oracle::coarseness_levels(delta)) + " levels" +
                   (lc.holds ? "" : "; " + lc.counterexample));
      }
    } else {
      auto delta = ranking();
      if (theorem == 0 || theorem == 2) {
        congruence_line("congruence II (S)", oracle::check_congruence_II(delta, transform::to_prob(delta), limits),
                        delta.space());
        congruence_line("congruence II (T')",
                        oracle::check_congruence_II(delta, transform::to_prob_exponential(delta), limits),
                        delta.space());
        auto line = [&](const std::string& name, const oracle::PropertyCheck& c) {
          report(name, c.holds, std::to_string(c.cases) + " cases" + (c.holds ? "" : "; " + c.counterexample));
        };
        line("lemma 2 (world outweighs tail)", oracle::check_lemma2(delta));
        line("probability bounds", oracle::check_probability_bounds(delta, opts_.max_n));
        line("skewness S vs T'", oracle::check_skewness(delta));
        line("round trip T(S(delta)) = D(delta)", oracle::check_round_trip(delta));
      }
      if (theorem == 0 || theorem == 3) {
        auto mode = opts_.mode == "imaging" ? oracle::Revision::imaging : oracle::Revision::conditioning;
        if (has_evidence()) {
          auto r = oracle::check_theorem3(delta, evidence(delta.space()), mode);
          report(std::string("theorem 3 (") + oracle::to_string(mode) + ")", r.holds, r.diagnostic);
        } else {
          const std::size_t n = delta.size();
          if (n > opts_.max_n || n > 24)
            throw Error(Errc::space_too_large, std::to_string(n) + " worlds exceeds the enumeration guard");
          std::size_t failures = 0;
          std::string first;
          for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            auto r = oracle::check_theorem3(delta, Event::from_mask(n, mask), mode);
            if (!r.holds && failures++ == 0) first = r.diagnostic;
          }
          std::size_t events = (std::size_t{1} << n) - 1;
          report(std::string("theorem 3 (") + oracle::to_string(mode) + ")", failures == 0,
                 std::to_string(events) + " evidence events" + (failures ? "; first failure: " + first : ""));
        }
      }
    }
    if (json()) emit({{"command", "check"}, {"holds", all_hold}, {"checks", lines}});
    return all_hold ? kOk : kViolation;
  }

  const Options& opts_;
  std::istream& in_;
  std::ostream& out_;
  std::optional<DocumentModel> doc_;
};

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Ranking-function and probability transformations with exhaustive oracle checks", "spohn"};
  app.add_option("command", opts.command,
                 "to-kappa | to-prob | to-prob-exp | eps-rule | condition | image | densify | bounds | "
                 "threshold | check | roundtrip")
      ->required();
  app.add_option("input", opts.input, "input document (JSON); '-' or omitted reads stdin");
  app.add_flag("--normalize", opts.normalize, "divide probability values by their sum");
  app.add_flag("--densify", opts.densify, "accept any ranks and densify them on load");
  app.add_option("--eps", opts.eps, "epsilon for the epsilon rule (decimal or a/b)");
  app.add_option("--evidence", opts.evidence, "comma-separated world labels, e.g. w2,w3");
  app.add_option("--mode", opts.mode, "revision used by check --theorem 3")
      ->check(CLI::IsMember({"conditioning", "imaging"}));
  app.add_option("--precision", opts.precision, "decimal places in rendered output")->check(CLI::Range(0, 60));
  app.add_option("--max-n", opts.max_n, "enumeration guard for oracle checks");
  app.add_option("--format", opts.format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--theorem", opts.theorem, "check only theorem 1, 2 or 3")->check(CLI::Range(1, 3));
  app.add_option("--seed", opts.seed, "seed for the random distribution of check --theorem 1");
  app.add_option("--n", opts.n, "world count for the random distribution")->check(CLI::Range(1, 24));
  app.add_option("--strata", opts.strata, "strata vector k_0,...,k_s instead of a ranking document");
  app.add_option("--workers", opts.workers, "threads for pair enumeration")->check(CLI::Range(1, 256));

  std::vector<std::string> storage{"spohn"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    detail::Session session(opts, in, out);
    return session.dispatch();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::space_too_large ? kGuardExceeded : kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace spohn::cli
