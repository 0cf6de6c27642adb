#include "flagtilt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "flagtilt/error.hpp"
#include "flagtilt/json_io.hpp"

namespace flagtilt::cli {

namespace {

struct InputMissing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string weight_text(const GLWeight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.rank(); ++i) s += (i ? "," : "") + to_string(w[i]);
  return s + ")";
}

std::string weight_text(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.rank(); ++i) s += (i ? "," : "") + to_string(w[i]);
  return s + ")";
}

std::string character_text(const CharacterSum& c) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [w, m] : c.terms()) {
    if (!s.empty()) s += m < 0 ? " - " : " + ";
    else if (m < 0) s += "-";
    const Int a = abs(m);
    if (a != 1) s += to_string(a) + " ";
    s += "S" + weight_text(w);
  }
  return s;
}

void print_outcome(std::ostream& out, const CohomologyOutcome& o) {
  out << "grade " << grade_name(o.grade) << "\n";
  for (const auto& [t, c] : o.by_degree) {
    out << "  H^" << t << " = " << character_text(c) << "  (dim " << to_string(c.dimension())
        << ")\n";
  }
  out << "  euler = " << character_text(o.euler) << "\n";
}

void print_status(std::ostream& out, const char* what, const ConditionStatus& s) {
  out << what << ": " << verdict_name(s.verdict);
  if (s.witness) {
    if (s.witness->kind == Witness::Kind::ExactDegree) {
      out << " (H^" << s.witness->degree << " = " << character_text(s.witness->character) << ")";
    } else {
      out << " (euler = " << character_text(s.witness->character) << ")";
    }
  }
  out << "\n";
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Confirmed:
      return kConfirmed;
    case Verdict::Refuted:
      return kRefuted;
    case Verdict::Inconclusive:
      return kInconclusive;
  }
  return kConfirmed;
}

json read_json(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputMissing("cannot open " + path);
    buffer << in.rdbuf();
  }
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw Error(path + ": malformed JSON: " + e.what());
  }
}

std::vector<Int> parse_ints(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t start = !item.empty() && (item[0] == '-' || item[0] == '+') ? 1 : 0;
    if (item.size() <= start || item.find_first_not_of("0123456789", start) != std::string::npos) {
      throw Error("not an integer list: \"" + text + "\"");
    }
    out.emplace_back(item[0] == '+' ? item.substr(1) : item);
  }
  return out;
}

struct Common {
  std::string format = "text";
  unsigned jobs = 1;
};

struct ShapeArgs {
  std::size_t n = 0;
  std::vector<std::size_t> dims;

  void attach(CLI::App* app) {
    app->add_option("--n", n, "dimension of V")->required()->check(CLI::PositiveNumber);
    app->add_option("--dims", dims, "subspace dimensions, comma separated")
        ->required()
        ->delimiter(',');
  }
  FlagShape shape() const { return FlagShape(n, dims); }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology and tilting checks for partial flag varieties"};
  app.name("flagtilt");
  app.require_subcommand(1);

  Common common;
  app.add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", common.jobs, "worker threads for pair checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.fallthrough();

  auto* bbw = app.add_subcommand("bbw", "Borel-Weil-Bott on the full flag variety");
  std::optional<std::size_t> bbw_n;
  std::string bbw_weight;
  bbw->add_option("--n", bbw_n, "rank, must match the weight length");
  bbw->add_option("--weight", bbw_weight, "weight, comma separated")->required();

  auto* cohom = app.add_subcommand("cohom", "cohomology of a bundle expression");
  std::string cohom_expr;
  bool euler_only = false;
  bool no_reduce = false;
  cohom->add_option("--expr", cohom_expr, "bundle expression JSON ('-' for stdin)")->required();
  cohom->add_flag("--euler-only", euler_only, "compute only the Euler character");
  cohom->add_flag("--no-reduce", no_reduce, "skip the minimal-base reduction");

  auto* ext = app.add_subcommand("ext", "Ext groups between two bundle expressions");
  std::string ext_source;
  std::string ext_target;
  ext->add_option("--source", ext_source, "bundle expression JSON")->required();
  ext->add_option("--target", ext_target, "bundle expression JSON")->required();

  auto* kap = app.add_subcommand("kapranov", "list Kapranov's collection");
  ShapeArgs kap_shape;
  kap_shape.attach(kap);
  bool kap_quiver = false;
  kap->add_flag("--quiver", kap_quiver, "also compute the Hom quiver");

  auto* strong = app.add_subcommand("check-strong", "check strong exceptionality");
  std::string strong_collection;
  std::optional<std::size_t> strong_n;
  std::vector<std::size_t> strong_dims;
  auto* strong_file =
      strong->add_option("--collection", strong_collection, "collection JSON ('-' for stdin)");
  auto* strong_n_opt = strong->add_option("--n", strong_n, "use Kapranov's collection on F(dims; n)");
  strong->add_option("--dims", strong_dims, "subspace dimensions")->delimiter(',')->needs(strong_n_opt);
  strong_file->excludes(strong_n_opt);

  auto* twist = app.add_subcommand("twist-check", "descent condition (T2) for an orbit sum");
  ShapeArgs twist_shape;
  twist_shape.attach(twist);
  bool twist_sigma = false;
  std::string twist_expr;
  twist->add_flag("--sigma", twist_sigma, "include the duality automorphism");
  twist->add_option("--expr", twist_expr, "terms JSON for T (default: the Kapranov sum)");

  auto* counter = app.add_subcommand("counterexample", "the three obstruction families");
  ShapeArgs counter_shape;
  counter_shape.attach(counter);
  int counter_case = 0;
  counter->add_option("--case", counter_case, "family 1, 2 or 3")
      ->required()
      ->check(CLI::Range(1, 3));

  auto* toric = app.add_subcommand("toric-check", "grid collection on a projective-bundle tower");
  std::string tower_path;
  toric->add_option("--tower", tower_path, "tower JSON ('-' for stdin)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "flagtilt: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  const bool as_json = common.format == "json";
  auto emit = [&](const json& j) { out << j.dump(2) << "\n"; };

  try {
    if (bbw->parsed()) {
      const std::vector<Int> entries = parse_ints(bbw_weight);
      if (bbw_n && *bbw_n != entries.size()) {
        throw RankMismatch("--n " + std::to_string(*bbw_n) + " but the weight has " +
                           std::to_string(entries.size()) + " entries");
      }
      const Weight chi(entries);
      const BBWResolution r = bbw_resolve(chi);
      if (as_json) {
        json j = to_json(r);
        if (const auto* reg = std::get_if<Regular>(&r)) {
          j["cohomology"] = to_json(CohomologyTerm{reg->degree, dual_weight(reg->dominant)});
        }
        emit(j);
      } else if (std::holds_alternative<Singular>(r)) {
        out << "singular: all cohomology of " << weight_text(chi) << " vanishes\n";
      } else {
        const auto& reg = std::get<Regular>(r);
        out << "degree " << reg.degree << ", dominant " << weight_text(reg.dominant) << ", H^"
            << reg.degree << " = S" << weight_text(dual_weight(reg.dominant)) << "(V)\n";
      }
      return 0;
    }

    if (cohom->parsed()) {
      const BundleExpr e = bundle_from_json(read_json(cohom_expr));
      const CohomologyOutcome o =
          euler_only ? euler_outcome(e) : cohomology(e, {.reduce_to_minimal_base = !no_reduce});
      if (as_json) {
        emit(to_json(o));
      } else {
        out << e.shape().to_string() << "  " << e.to_string() << "\n";
        print_outcome(out, o);
      }
      return 0;
    }

    if (ext->parsed()) {
      const BundleExpr a = bundle_from_json(read_json(ext_source));
      const BundleExpr b = bundle_from_json(read_json(ext_target));
      const CohomologyOutcome o = ext_groups(a, b);
      if (as_json) {
        emit(to_json(o));
      } else {
        out << "Ext^*(" << a.to_string() << ", " << b.to_string() << ")\n";
        print_outcome(out, o);
      }
      return 0;
    }

    if (kap->parsed()) {
      const Collection c = enumerate_collection(kap_shape.shape());
      std::optional<HomQuiver> quiver;
      if (kap_quiver) quiver = hom_quiver(c, common.jobs);
      if (as_json) {
        json j = to_json(c);
        if (quiver) j["hom_quiver"] = to_json(*quiver);
        emit(j);
      } else {
        out << c.shape.to_string() << ": " << c.members.size() << " members\n";
        for (std::size_t i = 0; i < c.members.size(); ++i) {
          out << "  " << i << "  " << c.members[i].to_string() << "\n";
        }
        if (quiver) {
          out << "Hom dimensions:\n";
          for (const auto& row : quiver->dims) {
            out << " ";
            for (const auto& d : row) out << " " << to_string(d);
            out << "\n";
          }
        }
      }
      return 0;
    }

    if (strong->parsed()) {
      Collection c = [&] {
        if (!strong_collection.empty()) return collection_from_json(read_json(strong_collection));
        if (!strong_n) throw Error("check-strong needs --collection or --n/--dims");
        return enumerate_collection(FlagShape(*strong_n, strong_dims));
      }();
      const PairReport r = check_strong_exceptional(c.members, common.jobs);
      if (as_json) {
        emit(to_json(r));
      } else {
        out << c.shape.to_string() << ", " << c.members.size() << " members: "
            << verdict_name(r.overall) << "\n";
        for (const auto& v : r.pairs) {
          const bool bad = v.higher_ext_status.verdict != Verdict::Confirmed ||
                           (v.hom_status && v.hom_status->verdict != Verdict::Confirmed);
          if (!bad) continue;
          out << "  pair (" << v.source << ", " << v.target << ")\n";
          if (v.hom_status) print_status(out << "    ", "hom condition", *v.hom_status);
          print_status(out << "    ", "higher Ext", v.higher_ext_status);
        }
      }
      return verdict_code(r.overall);
    }

    if (twist->parsed()) {
      const FlagShape shape = twist_shape.shape();
      BundleExpr t(shape);
      if (!twist_expr.empty()) {
        const json j = read_json(twist_expr);
        t = bundle_terms_from_json(j.is_object() ? j.at("terms") : j, shape);
      } else {
        for (const auto& m : enumerate_collection(shape).members) t += m;
      }
      const DescentReport r =
          check_t2(t, twist_sigma ? TwistKind::WithSigma : TwistKind::InnerOnly, common.jobs);
      if (as_json) {
        emit(to_json(r));
      } else {
        out << shape.to_string() << ", twist group " << twist_kind_name(r.kind) << ", "
            << r.members.size() << " orbit summands: T2 " << verdict_name(r.t2_status) << "\n";
        for (const auto& c : r.certificates) {
          Witness w = c.witness;
          out << "  Ext(" << r.members[c.source].to_string() << ", "
              << r.members[c.target].to_string() << "): ";
          if (w.kind == Witness::Kind::ExactDegree) {
            out << "H^" << w.degree << " = " << character_text(w.character) << "\n";
          } else {
            out << "euler = " << character_text(w.character) << "\n";
          }
        }
      }
      return verdict_code(r.t2_status);
    }

    if (counter->parsed()) {
      const CounterexampleReport r = counterexample_case(counter_case, counter_shape.shape());
      if (as_json) {
        emit(to_json(r));
      } else {
        out << "case " << r.case_number << " on " << r.shape.to_string() << ": "
            << verdict_name(r.verdict) << "\n";
        for (const auto& x : r.readings) {
          out << x.label << "\n  F = " << x.f.to_string() << "\n  G = " << x.g.to_string()
              << "\n  sigma^*F = " << x.sigma_f.to_string() << "\n  Ext^*(sigma^*F, G): ";
          print_outcome(out, x.ext);
          if (x.e1_outcome != x.ext) {
            out << "  filtration E1 page alone: ";
            print_outcome(out, x.e1_outcome);
          }
          print_status(out << "  ", "higher Ext", x.status);
          out << "  closed form H^" << x.closed_form.degree << " = S"
              << weight_text(x.closed_form.weight) << ": "
              << (x.closed_form_matches ? "matches"
                  : x.closed_form_euler_matches ? "euler matches"
                                                : "differs")
              << "\n";
        }
      }
      return verdict_code(r.verdict);
    }

    if (toric->parsed()) {
      const TowerSpec tower = tower_from_json(read_json(tower_path));
      const GridReport g = check_grid_collection(tower, common.jobs);
      const OrbitReport o = galois_orbit_check(tower);
      if (as_json) {
        emit({{"tower", to_json(tower)},
              {"grid_size", int_to_json(tower.grid_size())},
              {"grid", to_json(g)},
              {"orbits", to_json(o)}});
      } else {
        out << "tower of dimension " << tower.dimension() << ", grid of " << g.members.size()
            << ": " << verdict_name(g.overall) << "\n";
        out << "orbits " << (o.orbit_closed ? "closed" : "not closed") << ", "
            << o.orbit_classes.size() << " classes\n";
        for (const auto& cls : o.orbit_classes) {
          out << " ";
          for (const auto& d : cls) out << " " << weight_text(Weight(d));
          out << "\n";
        }
      }
      return verdict_code(g.overall);
    }
  } catch (const InputMissing& e) {
    err << "flagtilt: " << e.what() << "\n";
    return kNoInput;
  } catch (const Error& e) {
    err << "flagtilt: " << e.what() << "\n";
    return kDataError;
  } catch (const json::exception& e) {
    err << "flagtilt: malformed input: " << e.what() << "\n";
    return kDataError;
  }
  return kUsage;
}

}  // namespace flagtilt::cli
