#include "flagtilt/json_io.hpp"

#include <limits>

#include "flagtilt/error.hpp"

namespace flagtilt {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::size_t size_from_json(const json& j) {
  const Int v = int_from_json(j);
  if (v < 0) throw Error("expected a non-negative integer, got " + to_string(v));
  return to_size(v);
}

json grade_json(Grade g) { return std::string(grade_name(g)); }

Grade grade_from_json(const json& j) {
  const std::string s = j.get<std::string>();
  for (Grade g : {Grade::Exact, Grade::E1Bound, Grade::EulerOnly}) {
    if (grade_name(g) == s) return g;
  }
  throw Error("unknown grade \"" + s + "\"");
}

json degree_map(const std::map<std::size_t, CharacterSum>& m) {
  json out = json::object();
  for (const auto& [t, c] : m) out[std::to_string(t)] = to_json(c);
  return out;
}

json dim_map(const std::map<std::size_t, Int>& m) {
  json out = json::object();
  for (const auto& [t, d] : m) out[std::to_string(t)] = int_to_json(d);
  return out;
}

json multidegree_json(const MultiDegree& d) {
  json out = json::array();
  for (const auto& x : d) out.push_back(int_to_json(x));
  return out;
}

std::string slot_kind_name(SlotKind k) {
  switch (k) {
    case SlotKind::Sub:
      return "sub";
    case SlotKind::Block:
      return "block";
    case SlotKind::Quot:
      return "quot";
  }
  return "?";
}

SlotKind slot_kind_from_json(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "sub") return SlotKind::Sub;
  if (s == "block") return SlotKind::Block;
  if (s == "quot") return SlotKind::Quot;
  throw Error("unknown slot \"" + s + "\" (expected sub, block or quot)");
}

json terms_json(const BundleExpr& e) {
  json terms = json::array();
  for (const auto& [m, mult] : e.terms()) {
    json factors = json::array();
    for (const auto& f : m.factors()) {
      factors.push_back({{"slot", slot_kind_name(f.slot.kind)},
                         {"index", f.slot.index},
                         {"weight", to_json(f.weight)}});
    }
    terms.push_back({{"mult", int_to_json(mult)}, {"factors", factors}});
  }
  return terms;
}

}  // namespace

json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return to_int64(v);
  }
  return to_string(v);
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Int(j.get<std::uint64_t>()) : Int(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) {
      return Int(s);
    }
  }
  throw Error("expected an integer, got " + j.dump());
}

json to_json(const GLWeight& w) {
  json out = json::array();
  for (const auto& x : w.entries()) out.push_back(int_to_json(x));
  return out;
}

GLWeight weight_from_json(const json& j) {
  if (!j.is_array()) throw Error("expected a weight array, got " + j.dump());
  std::vector<Int> entries;
  for (const auto& x : j) entries.push_back(int_from_json(x));
  return GLWeight(std::move(entries));
}

json to_json(const CharacterSum& c) {
  json out = json::array();
  for (const auto& [w, m] : c.terms()) {
    out.push_back({{"weight", to_json(w)}, {"mult", int_to_json(m)}});
  }
  return out;
}

CharacterSum character_from_json(const json& j, std::size_t rank) {
  if (!j.is_array()) throw Error("expected a character array, got " + j.dump());
  CharacterSum c(rank);
  for (const auto& t : j) c.add(weight_from_json(field(t, "weight")), int_from_json(field(t, "mult")));
  return c;
}

json to_json(const BBWResolution& r) {
  if (std::holds_alternative<Singular>(r)) return {{"singular", true}};
  const auto& reg = std::get<Regular>(r);
  return {{"singular", false}, {"degree", reg.degree}, {"dominant", to_json(reg.dominant)}};
}

json to_json(const CohomologyOutcome& o) {
  return {{"rank", o.rank},
          {"grade", grade_json(o.grade)},
          {"by_degree", degree_map(o.by_degree)},
          {"euler", to_json(o.euler)}};
}

CohomologyOutcome outcome_from_json(const json& j) {
  CohomologyOutcome o;
  o.rank = size_from_json(field(j, "rank"));
  o.grade = grade_from_json(field(j, "grade"));
  for (const auto& [key, value] : field(j, "by_degree").items()) {
    o.by_degree.emplace(std::stoul(key), character_from_json(value, o.rank));
  }
  o.euler = character_from_json(field(j, "euler"), o.rank);
  return o;
}

json to_json(const CohomologyTerm& t) {
  return {{"degree", t.degree}, {"weight", to_json(t.weight)}};
}

json to_json(const FlagShape& s) { return {{"n", s.n()}, {"dims", s.dims()}}; }

FlagShape shape_from_json(const json& j) {
  std::vector<std::size_t> dims;
  const json& d = field(j, "dims");
  if (!d.is_array()) throw Error("\"dims\" must be an array");
  for (const auto& x : d) dims.push_back(size_from_json(x));
  return FlagShape(size_from_json(field(j, "n")), std::move(dims));
}

json to_json(const BundleExpr& e) {
  return {{"flag", to_json(e.shape())}, {"terms", terms_json(e)}, {"text", e.to_string()}};
}

BundleExpr bundle_terms_from_json(const json& terms, const FlagShape& shape) {
  if (!terms.is_array()) throw Error("\"terms\" must be an array");
  BundleExpr e(shape);
  for (const auto& t : terms) {
    std::vector<Factor> factors;
    for (const auto& f : field(t, "factors")) {
      Slot slot{slot_kind_from_json(field(f, "slot")), size_from_json(field(f, "index"))};
      factors.push_back({slot, weight_from_json(field(f, "weight"))});
    }
    const Int mult = t.contains("mult") ? int_from_json(t.at("mult")) : Int(1);
    e += BundleExpr::monomial(shape, std::move(factors), mult);
  }
  return e;
}

BundleExpr bundle_from_json(const json& j) {
  return bundle_terms_from_json(field(j, "terms"), shape_from_json(field(j, "flag")));
}

json to_json(const Collection& c) {
  json members = json::array();
  for (const auto& m : c.members) members.push_back({{"terms", terms_json(m)}, {"text", m.to_string()}});
  return {{"flag", to_json(c.shape)}, {"members", members}};
}

Collection collection_from_json(const json& j) {
  Collection c{shape_from_json(field(j, "flag")), {}};
  const json& members = field(j, "members");
  if (!members.is_array()) throw Error("\"members\" must be an array");
  for (const auto& m : members) c.members.push_back(bundle_terms_from_json(field(m, "terms"), c.shape));
  return c;
}

json to_json(const Witness& w) {
  if (w.kind == Witness::Kind::Euler) return {{"kind", "euler"}, {"character", to_json(w.character)}};
  return {{"kind", "exact_degree"}, {"degree", w.degree}, {"character", to_json(w.character)}};
}

json to_json(const ConditionStatus& s) {
  json out = {{"verdict", std::string(verdict_name(s.verdict))}};
  if (s.witness) out["witness"] = to_json(*s.witness);
  if (s.verdict == Verdict::Inconclusive) out["bound"] = degree_map(s.bound);
  return out;
}

json to_json(const PairVerdict& v) {
  json out = {{"source", v.source},
              {"target", v.target},
              {"hom_character", to_json(v.hom_character)},
              {"grade", grade_json(v.ext.grade)},
              {"ext", to_json(v.ext)},
              {"higher_ext_status", to_json(v.higher_ext_status)}};
  if (v.hom_status) out["hom_status"] = to_json(*v.hom_status);
  return out;
}

json to_json(const PairReport& r) {
  json pairs = json::array();
  for (const auto& v : r.pairs) pairs.push_back(to_json(v));
  return {{"overall", std::string(verdict_name(r.overall))}, {"pairs", pairs}};
}

json to_json(const HomQuiver& q) {
  json chars = json::array();
  json dims = json::array();
  json grades = json::array();
  for (std::size_t i = 0; i < q.characters.size(); ++i) {
    json crow = json::array();
    json drow = json::array();
    json grow = json::array();
    for (std::size_t j = 0; j < q.characters[i].size(); ++j) {
      crow.push_back(to_json(q.characters[i][j]));
      drow.push_back(int_to_json(q.dims[i][j]));
      grow.push_back(grade_json(q.grades[i][j]));
    }
    chars.push_back(crow);
    dims.push_back(drow);
    grades.push_back(grow);
  }
  return {{"characters", chars}, {"dims", dims}, {"grades", grades}};
}

json to_json(const PieceCohomology& p) {
  json blocks = json::array();
  for (const auto& w : p.piece.monomial.block_weights) blocks.push_back(to_json(w));
  json out = {{"flag", to_json(p.shape)},
              {"block_weights", blocks},
              {"multiplicity", int_to_json(p.piece.multiplicity)},
              {"level", p.piece.level}};
  out["cohomology"] = p.term ? to_json(*p.term) : json(nullptr);
  return out;
}

json to_json(const DescentReport& r) {
  json members = json::array();
  for (const auto& m : r.members) members.push_back(to_json(m));
  json pairs = json::array();
  for (const auto& v : r.pairs) pairs.push_back(to_json(v));
  json certs = json::array();
  for (const auto& c : r.certificates) {
    certs.push_back({{"source", c.source}, {"target", c.target}, {"witness", to_json(c.witness)}});
  }
  return {{"kind", std::string(twist_kind_name(r.kind))},
          {"orbit_members", members},
          {"pairs", pairs},
          {"t2_status", std::string(verdict_name(r.t2_status))},
          {"certificates", certs}};
}

json to_json(const CounterexampleReport& r) {
  json readings = json::array();
  for (const auto& x : r.readings) {
    json e1 = json::array();
    for (const auto& p : x.e1) e1.push_back(to_json(p));
    readings.push_back({{"label", x.label},
                        {"F", to_json(x.f)},
                        {"G", to_json(x.g)},
                        {"sigma_F", to_json(x.sigma_f)},
                        {"ext", to_json(x.ext)},
                        {"e1_outcome", to_json(x.e1_outcome)},
                        {"e1_pieces", e1},
                        {"status", to_json(x.status)},
                        {"closed_form", to_json(x.closed_form)},
                        {"closed_form_matches", x.closed_form_matches},
                        {"closed_form_euler_matches", x.closed_form_euler_matches}});
  }
  return {{"case", r.case_number},
          {"flag", to_json(r.shape)},
          {"readings", readings},
          {"verdict", std::string(verdict_name(r.verdict))}};
}

json to_json(const TowerSpec& t) {
  json levels = json::array();
  for (const auto& level : t.levels()) {
    json bundles = json::array();
    for (const auto& b : level.bundles) {
      json summands = json::array();
      for (const auto& s : b) summands.push_back(multidegree_json(s));
      bundles.push_back(summands);
    }
    levels.push_back({{"bundles", bundles}, {"perms", level.perms}});
  }
  return {{"base_dim", t.base_dim()}, {"levels", levels}};
}

TowerSpec tower_from_json(const json& j) {
  std::vector<TowerLevel> levels;
  const json& ls = j.contains("levels") ? j.at("levels") : json::array();
  if (!ls.is_array()) throw Error("\"levels\" must be an array");
  for (const auto& l : ls) {
    TowerLevel level;
    for (const auto& b : field(l, "bundles")) {
      std::vector<MultiDegree> bundle;
      for (const auto& s : b) {
        if (!s.is_array()) throw Error("a summand must be an array of twists, got " + s.dump());
        MultiDegree d;
        for (const auto& x : s) d.push_back(int_from_json(x));
        bundle.push_back(std::move(d));
      }
      level.bundles.push_back(std::move(bundle));
    }
    if (l.contains("perms")) {
      for (const auto& p : l.at("perms")) {
        std::vector<std::size_t> perm;
        for (const auto& x : p) perm.push_back(size_from_json(x));
        level.perms.push_back(std::move(perm));
      }
    }
    levels.push_back(std::move(level));
  }
  return TowerSpec(size_from_json(field(j, "base_dim")), std::move(levels));
}

json to_json(const GridReport& r) {
  json members = json::array();
  for (const auto& m : r.members) members.push_back(multidegree_json(m));
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    json entry = {{"source", p.source},
                  {"target", p.target},
                  {"ext", dim_map(p.ext)},
                  {"hom_dim", int_to_json(p.hom_dim)},
                  {"higher_ext_status", std::string(verdict_name(p.higher_ext_status))}};
    if (p.hom_status) entry["hom_status"] = std::string(verdict_name(*p.hom_status));
    pairs.push_back(entry);
  }
  return {{"members", members}, {"pairs", pairs}, {"overall", std::string(verdict_name(r.overall))}};
}

json to_json(const OrbitReport& r) {
  json classes = json::array();
  for (const auto& c : r.orbit_classes) {
    json cls = json::array();
    for (const auto& m : c) cls.push_back(multidegree_json(m));
    classes.push_back(cls);
  }
  return {{"orbit_closed", r.orbit_closed}, {"orbit_classes", classes}};
}

}  // namespace flagtilt
