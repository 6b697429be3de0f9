#include "walg/cli.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "walg/affine.hpp"
#include "walg/integral_weyl.hpp"
#include "walg/kazhdan_lusztig.hpp"

namespace walg::cli {

namespace {

enum Flag : unsigned {
  kAlgebra = 1u << 0,
  kKappa = 1u << 1,
  kWeight = 1u << 2,
  kWord = 1u << 3,
  kXWord = 1u << 4,
  kOrder = 1u << 5,
  kReduction = 1u << 6,
  kDeltaBound = 1u << 7,
};

struct CommandInfo {
  std::string name;
  std::string description;
  unsigned flags;
  unsigned required;
};

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> table = {
      {"central-charge", "central charge c(kappa)", kAlgebra | kKappa, kAlgebra | kKappa},
      {"conformal-weight", "conformal weight of the highest weight vector", kAlgebra | kKappa | kWeight,
       kAlgebra | kKappa | kWeight},
      {"verma-char", "character of the Verma module", kAlgebra | kKappa | kWeight | kOrder,
       kAlgebra | kKappa | kWeight},
      {"vacuum-char", "graded dimension of the W-algebra", kAlgebra | kOrder, kAlgebra},
      {"irr-char", "irreducible character by the Kazhdan-Lusztig formulas",
       kAlgebra | kKappa | kWeight | kWord | kOrder | kReduction | kDeltaBound, kAlgebra | kKappa | kWeight},
      {"integral-weyl", "simple system and Coxeter matrix of the integral Weyl group",
       kAlgebra | kKappa | kWeight | kDeltaBound, kAlgebra | kKappa | kWeight},
      {"kl-poly", "P_{x,w}, Q_{x,w} and mu(x,w) in the integral Weyl group",
       kAlgebra | kKappa | kWeight | kWord | kXWord | kDeltaBound, kAlgebra | kKappa | kWeight},
      {"check", "domain predicates of a weight", kAlgebra | kKappa | kWeight, kAlgebra | kKappa | kWeight},
  };
  return table;
}

const CommandInfo& info_of(const std::string& name) {
  for (const auto& c : command_table())
    if (c.name == name) return c;
  throw UsageError("unknown command '" + name + "'");
}

std::vector<int> parse_word(const std::string& flag, const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream tokens(cleaned);
  while (tokens >> token) {
    if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        token.size() > 6)
      throw UsageError(flag + ": malformed generator index '" + token + "'");
    int s = std::stoi(token);
    if (s < 1) throw UsageError(flag + ": generator indices start at 1");
    out.push_back(s);
  }
  return out;
}

std::string join_word(const std::vector<int>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) out += (i ? " " : "") + std::to_string(word[i]);
  return out;
}

std::string join_vector(const Vector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v(i));
  return out;
}

nlohmann::ordered_json json_vector(const Vector& v) {
  auto out = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

nlohmann::ordered_json json_word(const std::vector<int>& word) {
  auto out = nlohmann::ordered_json::array();
  for (int s : word) out.push_back(std::to_string(s));
  return out;
}

const LieType& need_algebra(const CommandSpec& s) { return *s.algebra; }

AffineWeight Lambda_of(const RootSystem& rs, const CommandSpec& s) {
  return weight_at_kappa(rs, *s.weight, *s.kappa);
}

std::string root_text(const AffineRealRoot& a) {
  std::string out = "[" + join_vector(a.finite) + "]";
  if (a.degree == 0) return out;
  out += a.degree > 0 ? " + " : " - ";
  long long d = a.degree > 0 ? a.degree : -a.degree;
  return out + (d == 1 ? "" : std::to_string(d)) + "delta";
}

void put_character(nlohmann::ordered_json& data, const CharacterResult& r) {
  data["central_charge"] = to_string(r.central_charge);
  data["delta"] = to_string(r.conformal_weight);
  data["offset"] = to_string(r.series.offset());
  data["step"] = to_string(r.series.step());
  auto coefficients = nlohmann::ordered_json::array();
  for (const auto& c : r.series.coefficients()) coefficients.push_back(to_string(c));
  data["coefficients"] = coefficients;
}

nlohmann::ordered_json header(const CommandSpec& s) {
  nlohmann::ordered_json data;
  data["algebra"] = need_algebra(s).name();
  if (s.kappa) data["kappa"] = to_string(*s.kappa);
  return data;
}

QSeries series_of(const nlohmann::ordered_json& data) {
  std::vector<Rational> c;
  for (const auto& v : data["coefficients"]) c.push_back(parse_rational(v.get<std::string>()));
  return QSeries(parse_rational(data["offset"].get<std::string>()),
                 parse_rational(data["step"].get<std::string>()), std::move(c));
}

std::string text_value(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + text_value(v[i]);
    return out + "]";
  }
  return v.dump();
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : command_table()) out.push_back(c.name);
    return out;
  }();
  return names;
}

CommandSpec parse_spec(const std::vector<std::string>& args) {
  CLI::App app{"Characters of W-algebra modules in exact arithmetic", "walg"};
  app.require_subcommand(1, 1);
  std::string algebra, kappa, weight, word, x_word, reduction = "plus", format = "text";
  int order = 10;
  long long delta_bound = 0;
  for (const auto& c : command_table()) {
    CLI::App* sub = app.add_subcommand(c.name, c.description);
    auto add = [&](Flag f, const std::string& name, std::string& target, const std::string& help) {
      if (!(c.flags & f)) return;
      auto* opt = sub->add_option(name, target, help);
      if (c.required & f) opt->required();
    };
    add(kAlgebra, "--algebra", algebra, "simple Lie type, e.g. A1, B3, E6");
    add(kKappa, "--kappa", kappa, "shifted level kappa = k + h^vee, e.g. 4/3");
    add(kWeight, "--weight", weight, "finite weight, comma-separated fundamental-weight coordinates");
    add(kWord, "--w", word, "word in the integral generators, e.g. \"1 2 1\" (empty for the identity)");
    add(kXWord, "--x", x_word, "lower word for kl-poly (default: identity)");
    if (c.flags & kOrder) sub->add_option("--order", order, "truncation order in q")->check(CLI::NonNegativeNumber);
    if (c.flags & kReduction)
      sub->add_option("--reduction", reduction, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
    if (c.flags & kDeltaBound)
      sub->add_option("--delta-bound", delta_bound, "degree bound of the integral root slice")
          ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    for (const CLI::App* sub : app.get_subcommands()) throw HelpRequested(sub->help());
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CommandSpec spec;
  CLI::App* chosen = app.get_subcommands().front();
  spec.command = chosen->get_name();
  const CommandInfo& info = info_of(spec.command);
  try {
    spec.algebra = LieType::parse(algebra);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--algebra: ") + e.what());
  }
  if (info.flags & kKappa) {
    try {
      spec.kappa = parse_rational(kappa);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--kappa: ") + e.what());
    }
  }
  if (info.flags & kWeight) {
    try {
      spec.weight = parse_vector(weight);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--weight: ") + e.what());
    }
    if (spec.weight->size() != spec.algebra->rank)
      throw UsageError("--weight: " + spec.algebra->name() + " needs " + std::to_string(spec.algebra->rank) +
                       " coordinates, got " + std::to_string(spec.weight->size()));
  }
  if (info.flags & kWord) spec.word = parse_word("--w", word);
  if (info.flags & kXWord) spec.x_word = parse_word("--x", x_word);
  if (info.flags & kOrder) spec.order = order;
  if (info.flags & kReduction) spec.reduction = reduction == "minus" ? Reduction::Minus : Reduction::Plus;
  if ((info.flags & kDeltaBound) && chosen->count("--delta-bound") > 0) spec.delta_bound = delta_bound;
  spec.format = format == "json" ? Format::Json : Format::Text;
  return spec;
}

std::vector<std::string> to_args(const CommandSpec& spec) {
  const CommandInfo& info = info_of(spec.command);
  std::vector<std::string> out{spec.command};
  if (spec.algebra) out.insert(out.end(), {"--algebra", spec.algebra->name()});
  if ((info.flags & kKappa) && spec.kappa) out.insert(out.end(), {"--kappa", to_string(*spec.kappa)});
  if ((info.flags & kWeight) && spec.weight) out.insert(out.end(), {"--weight", join_vector(*spec.weight)});
  if (info.flags & kWord) out.insert(out.end(), {"--w", join_word(spec.word)});
  if (info.flags & kXWord) out.insert(out.end(), {"--x", join_word(spec.x_word)});
  if (info.flags & kOrder) out.insert(out.end(), {"--order", std::to_string(spec.order)});
  if (info.flags & kReduction) out.insert(out.end(), {"--reduction", to_string(spec.reduction)});
  if ((info.flags & kDeltaBound) && spec.delta_bound)
    out.insert(out.end(), {"--delta-bound", std::to_string(*spec.delta_bound)});
  out.insert(out.end(), {"--format", spec.format == Format::Json ? "json" : "text"});
  return out;
}

Record execute(const CommandSpec& spec) {
  const CommandInfo& info = info_of(spec.command);
  if ((info.required & kAlgebra) && !spec.algebra) throw UsageError("--algebra is required");
  if ((info.required & kKappa) && !spec.kappa) throw UsageError("--kappa is required");
  if ((info.required & kWeight) && !spec.weight) throw UsageError("--weight is required");
  const RootSystem rs = build_root_system(*spec.algebra);
  if (spec.weight && spec.weight->size() != rs.rank()) throw UsageError("--weight: wrong number of coordinates");

  Record record{spec.command, header(spec)};
  auto& data = record.data;
  const std::string& cmd = spec.command;

  if (cmd == "central-charge") {
    data["central_charge"] = to_string(central_charge(rs, *spec.kappa));
  } else if (cmd == "conformal-weight") {
    data["weight"] = json_vector(*spec.weight);
    data["central_charge"] = to_string(central_charge(rs, *spec.kappa));
    data["delta"] = to_string(conformal_weight(rs, *spec.weight, *spec.kappa));
  } else if (cmd == "verma-char") {
    put_character(data, verma_character(rs, *spec.weight, *spec.kappa, spec.order));
    data["weight"] = json_vector(*spec.weight);
  } else if (cmd == "vacuum-char") {
    QSeries s = vacuum_algebra_character(rs, spec.order);
    data["offset"] = to_string(s.offset());
    data["step"] = to_string(s.step());
    auto coefficients = nlohmann::ordered_json::array();
    for (const auto& c : s.coefficients()) coefficients.push_back(to_string(c));
    data["coefficients"] = coefficients;
  } else if (cmd == "irr-char") {
    CharacterOptions options;
    options.slice_bound = spec.delta_bound;
    const AffineWeight Lambda = Lambda_of(rs, spec);
    CharacterResult r = spec.reduction == Reduction::Plus
                            ? irreducible_character_plus(rs, Lambda, spec.word, spec.order, options)
                            : irreducible_character_minus(rs, Lambda, spec.word, spec.order, options);
    put_character(data, r);
    data["reduction"] = to_string(r.reduction);
    data["weight"] = json_vector(*spec.weight);
    data["word"] = json_word(r.word);
    data["highest_weight"] = json_vector(r.highest_weight);
    data["warnings"] = r.warnings;
  } else if (cmd == "integral-weyl") {
    const AffineWeight Lambda = Lambda_of(rs, spec);
    IntegralCoxeterContext ctx(rs, Lambda, spec.delta_bound);
    data["weight"] = json_vector(*spec.weight);
    data["rank"] = std::to_string(ctx.rank());
    data["slice_bound"] = std::to_string(ctx.slice_bound());
    auto roots = nlohmann::ordered_json::array();
    for (const auto& a : ctx.simple_roots()) {
      nlohmann::ordered_json r;
      r["finite"] = json_vector(a.finite);
      r["degree"] = std::to_string(a.degree);
      roots.push_back(r);
    }
    data["simple_roots"] = roots;
    auto matrix = nlohmann::ordered_json::array();
    for (int i = 0; i < ctx.rank(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (int j = 0; j < ctx.rank(); ++j) {
        int m = ctx.coxeter_matrix()(i, j);
        row.push_back(m == 0 ? std::string("inf") : std::to_string(m));
      }
      matrix.push_back(row);
    }
    data["coxeter_matrix"] = matrix;
  } else if (cmd == "kl-poly") {
    const AffineWeight Lambda = Lambda_of(rs, spec);
    IntegralCoxeterContext ctx(rs, Lambda, spec.delta_bound);
    KLSession<IntegralCoxeterContext> session(ctx);
    auto x = session.intern(ctx.element_of(spec.x_word));
    auto w = session.intern(ctx.element_of(spec.word));
    data["weight"] = json_vector(*spec.weight);
    data["x"] = json_word(session.canonical_word(x));
    data["w"] = json_word(session.canonical_word(w));
    data["length_x"] = std::to_string(session.length(x));
    data["length_w"] = std::to_string(session.length(w));
    data["bruhat_leq"] = session.bruhat_leq(x, w);
    data["P"] = session.kl(x, w).to_string();
    data["Q"] = session.inverse_kl(x, w).to_string();
    data["mu"] = to_string(session.mu(x, w));
  } else if (cmd == "check") {
    if (*spec.kappa == 0) throw PreconditionError("critical-level", "kappa = 0 is the critical level");
    const AffineWeight Lambda = Lambda_of(rs, spec);
    data["weight"] = json_vector(*spec.weight);
    data["nondegenerate"] = is_nondegenerate(rs, Lambda);
    data["cond_plus"] = satisfies_cond_plus(rs, Lambda);
    data["antidominant"] = is_antidominant(rs, Lambda);
    data["dom_plus"] = domain_membership(rs, Lambda, DomainSign::Plus);
    data["dom_minus"] = domain_membership(rs, Lambda, DomainSign::Minus);
    data["dom_plus_nondeg"] = domain_membership(rs, Lambda, DomainSign::Plus, true);
    data["dom_minus_nondeg"] = domain_membership(rs, Lambda, DomainSign::Minus, true);
    data["plus_reduction_hw"] = json_vector(plus_reduction_hw(rs, Lambda));
    data["minus_reduction_hw"] = json_vector(minus_reduction_hw(Lambda));
  }
  return record;
}

std::string render(const Record& record, Format format) {
  if (format == Format::Json) return record.data.dump() + "\n";
  std::string out;
  const auto& data = record.data;
  if (data.contains("coefficients")) out += "character: " + series_of(data).to_string() + "\n";
  for (const auto& [key, value] : data.items()) {
    if (key == "coefficients") continue;
    if (key == "simple_roots") {
      out += "simple_roots:\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        AffineRealRoot a;
        std::vector<Rational> entries;
        for (const auto& c : value[i]["finite"]) entries.push_back(parse_rational(c.get<std::string>()));
        a.finite = make_vector(entries);
        a.degree = std::stoll(value[i]["degree"].get<std::string>());
        out += "  s" + std::to_string(i + 1) + ": " + root_text(a) + "\n";
      }
      continue;
    }
    if (key == "coxeter_matrix") {
      out += "coxeter_matrix:\n";
      for (const auto& row : value) {
        std::string line;
        for (const auto& m : row) line += (line.empty() ? "" : " ") + m.get<std::string>();
        out += "  " + line + "\n";
      }
      continue;
    }
    if (key == "warnings") {
      for (const auto& w : value) out += "warning: " + w.get<std::string>() + "\n";
      continue;
    }
    out += key + ": " + text_value(value) + "\n";
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandSpec spec;
  try {
    spec = parse_spec(args);
  } catch (const HelpRequested& h) {
    out << h.text();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }
  try {
    out << render(execute(spec), spec.format);
    return 0;
  } catch (const PreconditionError& e) {
    err << "precondition violated [" << e.condition() << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace walg::cli
