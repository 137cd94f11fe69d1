#include "bcf/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bcf/approx.hpp"
#include "bcf/error.hpp"
#include "bcf/json_io.hpp"
#include "bcf/literal.hpp"
#include "bcf/recovery.hpp"
#include "bcf/tree_eval.hpp"
#include "bcf/validation.hpp"

namespace bcf {

namespace {

constexpr std::string_view kDigitsGrammar = "<d_0>,<d_1>,...,<d_n> (non-negative integers)";
constexpr std::string_view kRangeGrammar = "<lo>,<hi> | <value> (integers)";

struct CommandInfo {
  Command command;
  const char* name;
  const char* summary;
  const char* usage;
};

constexpr CommandInfo kCommands[] = {
    {Command::Expand, "expand", "Expand (alpha, beta) into its digit pair",
     "bcf expand --alpha <number> --beta <number> [--terms N] [--digits D] [--approx [--guard G]] "
     "[--format json|text]"},
    {Command::Eval, "eval", "Convergents of a digit pair",
     "bcf eval --a <digits> --b <digits> [--n N] [--digits D] [--diagnostics] [--format json|text]"},
    {Command::Render, "render", "Draw the alpha and beta trees",
     "bcf render --a <digits> --b <digits> [--depth D] [--format text|latex|json]"},
    {Command::Validate, "validate", "Check the digit conditions",
     "bcf validate --a <digits> --b <digits> [--preperiod K] [--format json|text]"},
    {Command::Recover, "recover", "Recover the cubic behind periodic digits",
     "bcf recover (--a <digits> --b <digits> [--preperiod K] | --alpha <number> --beta <number> [--terms N]) "
     "[--digits D] [--format json|text]"},
    {Command::Scan, "scan", "Search cubic fields for periodic expansions",
     "bcf scan --c2 <range> --c1 <range> --c0 <range> [--beta <ratfunc>]... [--terms N] [--jobs N] "
     "[--preview N] [--format json|text]"},
};

const CommandInfo& info(Command c) {
  for (const auto& i : kCommands) {
    if (i.command == c) return i;
  }
  return kCommands[0];
}

std::string grammar_for(const std::string& flag) {
  if (flag == "alpha" || flag == "beta") return std::string(kNumberGrammar);
  if (flag == "a" || flag == "b") return std::string(kDigitsGrammar);
  return std::string(kRangeGrammar);
}

std::string describe(const std::string& flag, const std::string& token, std::optional<std::size_t> position,
                     const std::string& what) {
  std::string s = what + "\n  --" + flag + " " + token;
  if (position) s += "\n  " + std::string(flag.size() + 3 + *position, ' ') + "^";
  s += "\n  expected: " + grammar_for(flag);
  return s;
}

std::pair<long, long> parse_range(std::string_view text) {
  std::size_t comma = text.find(',');
  auto to_long = [&](std::string_view part, std::size_t offset) {
    Integer v = parse_integer(part, offset);
    if (!v.fits_slong_p()) throw ParseError(offset, "coefficient out of range");
    return v.get_si();
  };
  if (comma == std::string_view::npos) {
    long v = to_long(text, 0);
    return {v, v};
  }
  long lo = to_long(text.substr(0, comma), 0), hi = to_long(text.substr(comma + 1), comma + 1);
  if (lo > hi) throw ParseError(0, "range must satisfy lo <= hi");
  return {lo, hi};
}

// Checks one input literal, rewrapping failures with the flag, token and grammar.
void check_input(const std::string& flag, const std::string& token) {
  try {
    if (flag == "alpha" || flag == "beta") {
      parse_number(token);
    } else if (flag == "a" || flag == "b") {
      parse_digits(token);
    } else {
      parse_range(token);
    }
  } catch (const ParseError& e) {
    throw ParseError(e.position(), describe(flag, token, e.position(), e.what()));
  } catch (const Error& e) {
    throw Error(e.kind(), describe(flag, token, std::nullopt, e.what()));
  }
}

struct Parser {
  CLI::App app{"Bifurcating continued fractions: exact expansion, evaluation and recovery.", "bcf"};
  JobSpec spec;
  std::vector<std::pair<Command, CLI::App*>> subs;

  Parser() {
    app.require_subcommand(1, 1);
    for (const auto& c : kCommands) {
      CLI::App* sub = app.add_subcommand(c.name, c.summary);
      sub->usage(c.usage);
      subs.emplace_back(c.command, sub);
      switch (c.command) {
        case Command::Expand:
          input(sub, "alpha", true);
          input(sub, "beta", true);
          size(sub, "terms", spec.options.terms, "maximum digit pairs (default 64)", true);
          size(sub, "digits", spec.options.digits, "decimal digits in output (default 20; 50 with --approx)");
          sub->add_flag_function("--approx", [this](std::int64_t) { spec.options.approx = true; },
                                 "floating-point expansion (output marked heuristic)");
          size(sub, "guard", spec.options.guard, "extra working digits with --approx (default 10)");
          format(sub, {"json", "text"});
          break;
        case Command::Eval:
          input(sub, "a", true);
          input(sub, "b", true);
          size(sub, "n", spec.options.n, "convergent index (default: last)");
          size(sub, "digits", spec.options.digits, "decimal digits in output (default 20)");
          sub->add_flag_function("--diagnostics", [this](std::int64_t) { spec.options.diagnostics = true; },
                                 "include the gap diagnostics");
          format(sub, {"json", "text"});
          break;
        case Command::Render:
          input(sub, "a", true);
          input(sub, "b", true);
          size(sub, "depth", spec.options.depth, "tree depth (default: last index)");
          format(sub, {"text", "latex", "json"});
          break;
        case Command::Validate:
          input(sub, "a", true);
          input(sub, "b", true);
          size(sub, "preperiod", spec.options.preperiod, "digits are a preperiod of this length plus one period");
          format(sub, {"json", "text"});
          break;
        case Command::Recover:
          input(sub, "a", false);
          input(sub, "b", false);
          input(sub, "alpha", false);
          input(sub, "beta", false);
          size(sub, "preperiod", spec.options.preperiod, "preperiod length of the given digits (default 0)");
          size(sub, "terms", spec.options.terms, "expansion horizon for --alpha/--beta (default 64)", true);
          size(sub, "digits", spec.options.digits, "decimal digits in output (default 20)");
          format(sub, {"json", "text"});
          break;
        case Command::Scan:
          input(sub, "c2", true);
          input(sub, "c1", true);
          input(sub, "c0", true);
          sub->add_option_function<std::vector<std::string>>(
                 "--beta",
                 [this](const std::vector<std::string>& v) {
                   for (const auto& s : v) spec.inputs.emplace("beta", s);
                 },
                 "beta candidate as ratfunc literal (repeatable)")
              ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
          size(sub, "terms", spec.options.terms, "expansion horizon (default 64)", true);
          size(sub, "jobs", spec.options.jobs, "worker threads (default 1)", true);
          size(sub, "preview", spec.options.preview, "digits shown per record (default 12)");
          format(sub, {"json", "text"});
          break;
      }
    }
  }

  void input(CLI::App* sub, const std::string& name, bool required) {
    auto* opt = sub->add_option_function<std::string>(
        "--" + name, [this, name](const std::string& v) { spec.inputs.emplace(name, v); }, grammar_for(name));
    if (required) opt->required();
  }

  void size(CLI::App* sub, const std::string& name, std::optional<std::size_t>& target, const std::string& desc,
            bool positive = false) {
    auto* opt = sub->add_option_function<std::size_t>(
        "--" + name, [&target](const std::size_t& v) { target = v; }, desc);
    opt->check(CLI::Validator(
        [positive](std::string& v) -> std::string {
          bool digits = !v.empty() && v.find_first_not_of("0123456789") == std::string::npos;
          if (!digits || v.size() > 18 || (positive && std::stoull(v) == 0)) {
            return std::string("expected a ") + (positive ? "positive" : "non-negative") + " integer, got '" + v + "'";
          }
          return {};
        },
        positive ? "N>0" : "N>=0"));
  }

  void format(CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option_function<std::string>(
           "--format", [this](const std::string& v) { spec.options.format = v; }, "output format")
        ->check(CLI::IsMember(std::move(choices)));
  }

  std::string usage() const {
    for (const auto& [command, sub] : subs) {
      if (sub->parsed()) return info(command).usage;
    }
    std::string s;
    for (const auto& c : kCommands) s += std::string(s.empty() ? "" : "\n       ") + c.usage;
    return s;
  }

  JobSpec parse(const std::vector<std::string>& args) {
    if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
      bool known = false;
      for (const auto& c : kCommands) known = known || args[0] == c.name;
      if (!known) throw Error(ErrorKind::Usage, "unknown command '" + args[0] + "'");
    }
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    for (const auto& [command, sub] : subs) {
      if (sub->parsed()) spec.command = command;
    }
    for (const auto& [flag, token] : spec.inputs) check_input(flag, token);
    if (spec.command == Command::Recover) {
      bool digits = spec.inputs.count("a") + spec.inputs.count("b") > 0;
      bool numbers = spec.inputs.count("alpha") + spec.inputs.count("beta") > 0;
      bool complete = digits ? spec.inputs.count("a") && spec.inputs.count("b")
                             : spec.inputs.count("alpha") && spec.inputs.count("beta");
      if (digits == numbers || !complete) {
        throw Error(ErrorKind::Usage, "recover needs either --a and --b or --alpha and --beta");
      }
    }
    if (spec.options.guard && !spec.options.approx) throw Error(ErrorKind::Usage, "--guard only applies with --approx");
    return std::move(spec);
  }
};

const std::string& input_of(const JobSpec& spec, const std::string& name) { return spec.inputs.find(name)->second; }

SequencePair digits_of(const JobSpec& spec) {
  return SequencePair(parse_digits(input_of(spec, "a")), parse_digits(input_of(spec, "b")));
}

bool text_format(const JobSpec& spec) { return spec.options.format == "text"; }

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

void run_expand(const JobSpec& spec, std::ostream& out) {
  NumberSpec alpha = parse_number(input_of(spec, "alpha"));
  NumberSpec beta = parse_number(input_of(spec, "beta"));
  std::size_t terms = spec.options.terms.value_or(kDefaultMaxTerms);
  if (spec.options.approx) {
    ApproxOptions opts{terms, spec.options.digits.value_or(50), spec.options.guard.value_or(10)};
    auto [x, y] = approximate_pair(alpha, beta, opts);
    ApproxExpansion e = approx_expand(x, y, opts);
    if (text_format(spec)) {
      out << "heuristic: true\na: " << join(e.a) << "\nb: " << join(e.b) << "\nterminated: "
          << (e.terminated ? "true" : "false") << "\nprecision_exhausted: " << (e.precision_exhausted ? "true" : "false")
          << "\n";
    } else {
      out << to_json(e).dump(2) << "\n";
    }
    return;
  }
  auto [x, y] = resolve_pair(alpha, beta);
  Expansion e = bcf_expand(x, y, terms);
  if (text_format(spec)) {
    out << "a: " << join(e.digits.a()) << "\nb: " << join(e.digits.b()) << "\n";
    if (e.digits.terminal()) out << "terminal: " << e.digits.terminal()->to_string("alpha") << "\n";
    if (const auto& p = e.digits.periodicity()) {
      out << "periodicity: (" << p->preperiod << "," << p->period << ")\n";
    } else {
      out << (e.digits.is_finite() ? "terminated\n" : "no period within " + std::to_string(terms) + " terms\n");
    }
    return;
  }
  out << to_json(e, spec.options.digits.value_or(20)).dump(2) << "\n";
}

void run_eval(const JobSpec& spec, std::ostream& out) {
  SequencePair seqs = digits_of(spec);
  if (seqs.size() == 0) throw Error(ErrorKind::InvalidSequence, "digit lists are empty");
  std::size_t n = spec.options.n.value_or(seqs.size() - 1);
  std::size_t digits = spec.options.digits.value_or(20);
  auto all = convergents(seqs, n);
  const ConvergentTriple& last = all.back();
  if (text_format(spec)) {
    for (const auto& c : all) {
      out << "n=" << c.n << " A=" << c.A << " B=" << c.B << " C=" << c.C << " alpha=" << to_fraction_string(c.alpha)
          << " beta=" << to_fraction_string(c.beta) << "\n";
    }
    return;
  }
  Json j = to_json(last, digits);
  j["beta_dec"] = to_decimal(last.beta, digits);
  Json list = Json::array();
  for (const auto& c : all) list.push_back(to_json(c, digits));
  j["convergents"] = std::move(list);
  if (n >= 2) {
    j["det"] = det_invariant(seqs, n).get_str();
    auto cd = cross_difference(seqs, n);
    j["cross_difference"] = {{"lhs", to_fraction_string(cd.lhs)}, {"rhs", to_fraction_string(cd.rhs)}, {"holds", cd.holds()}};
  } else {
    j["det"] = nullptr;
    j["cross_difference"] = nullptr;
  }
  if (spec.options.diagnostics) j["diagnostics"] = to_json(gap_diagnostics(seqs, n + 1));
  out << j.dump(2) << "\n";
}

void run_render(const JobSpec& spec, std::ostream& out) {
  SequencePair seqs = digits_of(spec);
  if (seqs.size() == 0) throw Error(ErrorKind::InvalidSequence, "digit lists are empty");
  std::size_t depth = spec.options.depth.value_or(seqs.size() - 1);
  const std::string fmt = spec.options.format.value_or("text");
  if (fmt == "json") {
    Json j = {{"depth", depth},
              {"ascii", render_tree(seqs, depth, RenderFormat::Ascii)},
              {"latex", render_tree(seqs, depth, RenderFormat::Latex)}};
    out << j.dump(2) << "\n";
    return;
  }
  out << render_tree(seqs, depth, fmt == "latex" ? RenderFormat::Latex : RenderFormat::Ascii);
}

SequencePair periodic_digits(const JobSpec& spec, std::size_t preperiod) {
  auto a = parse_digits(input_of(spec, "a"));
  auto b = parse_digits(input_of(spec, "b"));
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidSequence, "digit lists differ in length");
  if (preperiod >= a.size()) throw Error(ErrorKind::InvalidSequence, "preperiod leaves no digits for the period");
  auto k = static_cast<std::ptrdiff_t>(preperiod);
  return SequencePair::periodic({a.begin(), a.begin() + k}, {b.begin(), b.begin() + k}, {a.begin() + k, a.end()},
                                {b.begin() + k, b.end()});
}

void run_validate(const JobSpec& spec, std::ostream& out) {
  SequencePair seqs = spec.options.preperiod ? periodic_digits(spec, *spec.options.preperiod) : digits_of(spec);
  ValidationReport r = validate(seqs);
  if (text_format(spec)) {
    out << (r.valid ? "valid" : "invalid") << " (tested through index " << r.tested_through << ")\n";
    for (const auto& v : r.violations) out << "  index " << v.index << ": " << to_string(v.rule) << "\n";
    for (auto i : r.indeterminate) out << "  index " << i << ": indeterminate\n";
    return;
  }
  out << to_json(r).dump(2) << "\n";
}

void run_recover(const JobSpec& spec, std::ostream& out) {
  SequencePair digits;
  std::optional<AlgebraicNumber> input_alpha;
  if (spec.inputs.count("a")) {
    digits = periodic_digits(spec, spec.options.preperiod.value_or(0));
    auto report = validate(digits);
    if (!report.valid) {
      const auto& v = report.violations.front();
      throw Error(ErrorKind::InvalidSequence,
                  "digits violate " + std::string(to_string(v.rule)) + " at index " + std::to_string(v.index));
    }
  } else {
    auto [x, y] = resolve_pair(parse_number(input_of(spec, "alpha")), parse_number(input_of(spec, "beta")));
    std::size_t terms = spec.options.terms.value_or(kDefaultMaxTerms);
    digits = bcf_expand(x, y, terms).digits;
    if (!digits.is_periodic()) {
      throw Error(ErrorKind::DegenerateSystem, "no period found within " + std::to_string(terms) + " terms");
    }
    input_alpha = x;
  }
  RecoveredCubic r = recover_from_digits(digits);
  Periodicity p = *digits.periodicity();
  std::size_t check = p.preperiod + 3 * p.period;
  Expansion again = bcf_expand(r.alpha, r.beta, check);
  bool round_trip = again.digits.size() == check;
  for (std::size_t i = 0; round_trip && i < check; ++i) {
    round_trip = again.digits.a_at(i) == digits.a_at(i) && again.digits.b_at(i) == digits.b_at(i);
  }
  if (text_format(spec)) {
    out << "poly: " << r.poly.to_string() << "\nbeta: " << RationalFunction{r.beta_num, r.beta_den}.literal()
        << "\nalpha: " << r.field->literal() << "\nround_trip: " << (round_trip ? "true" : "false") << "\n";
    return;
  }
  Json j = to_json(r, spec.options.digits.value_or(20));
  j["preperiod"] = p.preperiod;
  j["period"] = p.period;
  j["round_trip"] = round_trip;
  if (input_alpha) j["matches_input"] = (*input_alpha == r.alpha);
  out << j.dump(2) << "\n";
}

void run_scan(const JobSpec& spec, std::ostream& out) {
  ScanOptions opts;
  auto [c2lo, c2hi] = parse_range(input_of(spec, "c2"));
  auto [c1lo, c1hi] = parse_range(input_of(spec, "c1"));
  auto [c0lo, c0hi] = parse_range(input_of(spec, "c0"));
  opts.family = {c2lo, c2hi, c1lo, c1hi, c0lo, c0hi};
  auto [first, last] = spec.inputs.equal_range("beta");
  for (auto it = first; it != last; ++it) {
    NumberSpec s = parse_number(it->second);
    if (s.kind == LiteralKind::RatFunc) {
      opts.betas.push_back(*s.function);
    } else if (s.kind == LiteralKind::Rat) {
      opts.betas.push_back({Polynomial::constant(*s.value->as_rational()), Polynomial::constant(1)});
    } else {
      throw Error(ErrorKind::Usage, "scan beta candidates must be ratfunc or rat literals: " + it->second);
    }
  }
  opts.horizon = spec.options.terms.value_or(kDefaultMaxTerms);
  opts.jobs = spec.options.jobs.value_or(1);
  opts.preview = spec.options.preview.value_or(12);
  for (const auto& rec : conjecture_scan(opts)) {
    if (text_format(spec)) {
      out << rec.min_poly << '\t' << rec.interval << '\t' << rec.beta_expr << '\t' << rec.status << '\t'
          << (rec.preperiod ? std::to_string(*rec.preperiod) : "-") << '\t'
          << (rec.period ? std::to_string(*rec.period) : "-") << '\t' << rec.digits_preview << "\n";
    } else {
      out << to_json(rec).dump() << "\n";
    }
  }
}

void execute(const JobSpec& spec, std::ostream& out) {
  switch (spec.command) {
    case Command::Expand: return run_expand(spec, out);
    case Command::Eval: return run_eval(spec, out);
    case Command::Render: return run_render(spec, out);
    case Command::Validate: return run_validate(spec, out);
    case Command::Recover: return run_recover(spec, out);
    case Command::Scan: return run_scan(spec, out);
  }
}

}  // namespace

JobSpec parse_job(const std::vector<std::string>& args) {
  Parser parser;
  try {
    return parser.parse(args);
  } catch (const CLI::Error& e) {
    throw Error(ErrorKind::Usage, std::string(e.what()) + "\nusage: " + parser.usage());
  }
}

std::vector<std::string> to_args(const JobSpec& spec) {
  std::vector<std::string> args{info(spec.command).name};
  for (const auto& [flag, token] : spec.inputs) {
    args.push_back("--" + flag);
    args.push_back(token);
  }
  const JobOptions& o = spec.options;
  auto add = [&](const char* name, const std::optional<std::size_t>& v) {
    if (v) {
      args.push_back(std::string("--") + name);
      args.push_back(std::to_string(*v));
    }
  };
  add("terms", o.terms);
  add("depth", o.depth);
  add("digits", o.digits);
  add("guard", o.guard);
  add("jobs", o.jobs);
  add("n", o.n);
  add("preperiod", o.preperiod);
  add("preview", o.preview);
  if (o.format) {
    args.push_back("--format");
    args.push_back(*o.format);
  }
  if (o.approx) args.push_back("--approx");
  if (o.diagnostics) args.push_back("--diagnostics");
  return args;
}

std::string to_text(const JobSpec& spec) {
  std::string s;
  for (const auto& a : to_args(spec)) s += (s.empty() ? "" : " ") + a;
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Parser parser;
  JobSpec spec;
  try {
    spec = parser.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return parser.app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return parser.app.exit(e, out, err);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\nusage: " << parser.usage() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\nusage: " << parser.usage() << "\n";
    return kExitInput;
  }
  std::ostringstream buffer;
  try {
    execute(spec, buffer);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return is_input_error(e.kind()) ? kExitInput : kExitComputation;
  }
  out << buffer.str();
  return kExitOk;
}

}  // namespace bcf
