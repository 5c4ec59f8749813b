// Batch front end: every operation reachable files-in/files-out, plus the
// acceptance suite. Exit codes: 0 success/property holds, 1 property fails,
// 2 invalid input, 3 bound exceeded.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "catale/bridge.hpp"
#include "catale/canonical.hpp"
#include "catale/docio.hpp"
#include "catale/fincat.hpp"
#include "catale/locales.hpp"
#include "catale/psemi.hpp"
#include "catale/smallgen.hpp"
#include "catale/suite.hpp"

namespace {

using namespace catale;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBoundExceeded = 3;

struct Options {
  std::string format = "json";
  std::string point_variant = "strict";
  uint64_t max_search = kDefaultSearchBound;
  uint64_t seed = 0;
  bool seeded = false;
  uint64_t count = 10;
  bool dedup = false;
  bool catale_view = false;
  std::string via;
  std::vector<std::string> inputs;
};

PointVariant variant_of(const Options& opt) {
  if (opt.point_variant == "literal") return PointVariant::literal;
  if (opt.point_variant == "strict") return PointVariant::strict;
  throw Error(ErrorKind::Parse, "unknown point variant: " + opt.point_variant);
}

Fixture load_input(const std::string& arg) {
  if (arg.rfind("fixture:", 0) == 0) {
    return fixture(arg.substr(8));
  }
  std::ifstream in(arg);
  if (!in) {
    throw Error(ErrorKind::Parse, "cannot open input: " + arg);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_any(buffer.str());
}

const FinCategory& need_category(const Fixture& f) {
  if (!f.category) {
    throw Error(ErrorKind::Parse, "input does not describe a category");
  }
  return *f.category;
}

const PartialSemigroup& need_psg(const Fixture& f, const Options& opt) {
  if (f.psg) return *f.psg;
  if (f.category && opt.via == "to-psg") {
    static PartialSemigroup converted;  // single command per invocation
    converted = cat_to_psg(*f.category);
    return converted;
  }
  throw Error(ErrorKind::Parse, "input does not describe a partial semigroup");
}

const FinSpace& need_space(const Fixture& f) {
  if (!f.space) {
    throw Error(ErrorKind::Parse, "input does not describe a space");
  }
  return *f.space;
}

const MeetSemilattice& need_msl(const Fixture& f) {
  if (!f.msl) {
    throw Error(ErrorKind::Parse, "input does not describe a semilattice");
  }
  return *f.msl;
}

void emit_category(const FinCategory& cat, const Options& opt) {
  if (opt.format == "dot") {
    std::cout << dot_category(cat);
  } else if (opt.format == "text") {
    std::cout << cat.object_count() << " objects, " << cat.morphism_count()
              << " morphisms\n";
    for (Idx f = 0; f < cat.morphism_count(); ++f) {
      const Morphism& m = cat.morphism(f);
      std::cout << "  " << m.name << " : " << cat.object_name(m.dom) << " -> "
                << cat.object_name(m.cod) << "\n";
    }
  } else {
    std::cout << print_category(cat) << "\n";
  }
}

void emit_psg(const PartialSemigroup& psg, const Options& opt) {
  if (opt.format == "text") {
    std::cout << psg.size() << " elements\n";
    for (Idx a = 0; a < psg.size(); ++a) {
      for (Idx b = 0; b < psg.size(); ++b) {
        if (psg.defined(a, b)) {
          std::cout << "  " << psg.element_name(a) << "*" << psg.element_name(b)
                    << " = " << psg.element_name(psg.product(a, b)) << "\n";
        }
      }
    }
  } else {
    std::cout << print_psg(psg) << "\n";
  }
}

void emit_space(const FinSpace& space, const Options& opt) {
  if (opt.format == "text") {
    std::cout << space.point_count() << " points, " << space.opens().size()
              << " opens\n";
  } else {
    std::cout << print_space(space) << "\n";
  }
}

void emit_msl(const MeetSemilattice& msl, const Options& opt) {
  if (opt.format == "text") {
    std::cout << msl.size() << " elements, top "
              << msl.element_name(msl.top()) << "\n";
  } else {
    std::cout << print_msl(msl) << "\n";
  }
}

void require_valid(const Fixture& f) {
  ValidationReport report;
  if (f.category) {
    report = validate_category(*f.category);
  } else if (f.psg) {
    report = validate_psg(*f.psg);
  } else if (f.space) {
    report = validate_space(*f.space);
  } else if (f.msl) {
    report = validate_msl(*f.msl);
  }
  if (!report.ok()) {
    for (const auto& v : report.violations) std::cerr << v << "\n";
    throw Error(ErrorKind::Precondition, "input fails validation");
  }
}

int cmd_validate(const Options& opt) {
  const Fixture f = load_input(opt.inputs.at(0));
  ValidationReport report;
  std::string kind;
  if (f.category) {
    report = validate_category(*f.category);
    kind = "category";
  } else if (f.psg) {
    report = validate_psg(*f.psg);
    kind = "psg";
  } else if (f.space) {
    report = validate_space(*f.space);
    kind = "space";
  } else if (f.msl) {
    report = validate_msl(*f.msl);
    kind = "msl";
  }
  for (const auto& v : report.violations) std::cerr << v << "\n";
  for (const auto& n : report.notes) std::cerr << "note: " << n << "\n";
  std::cout << kind << (report.ok() ? " valid" : " invalid") << "\n";
  return report.ok() ? kExitOk : kExitInvalidInput;
}

int cmd_idempotents(const Options& opt) {
  const Fixture f = load_input(opt.inputs.at(0));
  require_valid(f);
  std::vector<std::string> names;
  if (f.category) {
    for (Idx i : idempotents(*f.category)) {
      names.push_back(f.category->morphism(i).name);
    }
  } else {
    const PartialSemigroup& psg = need_psg(f, opt);
    for (Idx i : idempotents_psg(psg)) names.push_back(psg.element_name(i));
  }
  for (const auto& n : names) std::cout << n << "\n";
  return kExitOk;
}

int cmd_karoubi(const Options& opt) {
  const Fixture f = load_input(opt.inputs.at(0));
  require_valid(f);
  const auto shared = std::make_shared<FinCategory>(need_category(f));
  emit_category(*karoubi(shared).category, opt);
  return kExitOk;
}

int cmd_skeleton(const Options& opt) {
  const Fixture f = load_input(opt.inputs.at(0));
  require_valid(f);
  const auto shared = std::make_shared<FinCategory>(need_category(f));
  emit_category(*skeleton(shared).category, opt);
  return kExitOk;
}

int cmd_taut(const Options& opt) {
  const Fixture f = load_input(opt.inputs.at(0));
  require_valid(f);
  const auto shared = std::make_shared<FinCategory>(need_category(f));
  emit_category(*taut_completion(shared).category, opt);
  return kExitOk;
}

int cmd_is_taut(const Options& opt) {
  const Fixture f = load_input(opt.inputs.at(0));
  require_valid(f);
  const bool taut = is_taut(need_category(f));
  std::cout << (taut ? "taut" : "not taut") << "\n";
  return taut ? kExitOk : kExitPropertyFails;
}

int cmd_to_psg(const Options& opt) {
  const Fixture f = load_input(opt.inputs.at(0));
  require_valid(f);
  const PartialSemigroup psg = cat_to_psg(need_category(f));
  if (opt.format == "dot") {
    emit_category(*psg_to_cat(std::make_shared<PartialSemigroup>(psg)).category,
                  opt);
  } else {
    emit_psg(psg, opt);
  }
  return kExitOk;
}

int cmd_to_cat(const Options& opt) {
  const Fixture f = load_input(opt.inputs.at(0));
  require_valid(f);
  const auto shared = std::make_shared<PartialSemigroup>(need_psg(f, opt));
  if (opt.catale_view) {
    emit_category(*catale_to_cat(shared).category, opt);
  } else {
    emit_category(*psg_to_cat(shared).category, opt);
  }
  return kExitOk;
}

int cmd_is_catale(const Options& opt) {
  const Fixture f = load_input(opt.inputs.at(0));
  require_valid(f);
  const CataleReport report = is_catale(need_psg(f, opt));
  for (const auto& failure : report.failures) std::cerr << failure << "\n";
  std::cout << (report.catale ? "catale" : "not a catale") << "\n";
  return report.catale ? kExitOk : kExitPropertyFails;
}

int cmd_roundtrip(const Options& opt) {
  const Fixture f = load_input(opt.inputs.at(0));
  if (f.category) {
    std::cout << print_category(*f.category) << "\n";
  } else if (f.psg) {
    std::cout << print_psg(*f.psg) << "\n";
  } else if (f.space) {
    std::cout << print_space(*f.space) << "\n";
  } else if (f.msl) {
    std::cout << print_msl(*f.msl) << "\n";
  }
  return kExitOk;
}

int cmd_adjunction_verify(const Options& opt) {
  const Fixture fc = load_input(opt.inputs.at(0));
  const Fixture fa = load_input(opt.inputs.at(1));
  require_valid(fc);
  require_valid(fa);
  const auto cat = std::make_shared<FinCategory>(need_category(fc));
  const auto psg = std::make_shared<PartialSemigroup>(need_psg(fa, opt));
  const AdjunctionReport report = verify_adjunction(cat, psg, opt.max_search);
  std::cout << "functors " << report.functor_count << ", homs "
            << report.hom_count << ", "
            << (report.bijective ? "bijective" : "mismatch") << "\n";
  for (const auto& m : report.mismatches) std::cerr << m << "\n";
  return report.bijective ? kExitOk : kExitPropertyFails;
}

int cmd_opens(const Options& opt) {
  const Fixture f = load_input(opt.inputs.at(0));
  require_valid(f);
  emit_msl(opens(need_space(f)), opt);
  return kExitOk;
}

int cmd_points(const Options& opt) {
  const Fixture f = load_input(opt.inputs.at(0));
  require_valid(f);
  emit_space(points(need_msl(f), variant_of(opt)).space, opt);
  return kExitOk;
}

int cmd_soberify(const Options& opt) {
  const Fixture f = load_input(opt.inputs.at(0));
  require_valid(f);
  emit_space(soberify(need_space(f), variant_of(opt)), opt);
  return kExitOk;
}

int cmd_spatialize(const Options& opt) {
  const Fixture f = load_input(opt.inputs.at(0));
  require_valid(f);
  emit_msl(spatialize(need_msl(f), variant_of(opt)), opt);
  return kExitOk;
}

int cmd_is_sober(const Options& opt) {
  const Fixture f = load_input(opt.inputs.at(0));
  require_valid(f);
  const bool sober = is_sober(need_space(f), variant_of(opt));
  std::cout << (sober ? "sober" : "not sober") << "\n";
  return sober ? kExitOk : kExitPropertyFails;
}

int cmd_is_spatial(const Options& opt) {
  const Fixture f = load_input(opt.inputs.at(0));
  require_valid(f);
  const bool spatial = is_spatial(need_msl(f), variant_of(opt));
  std::cout << (spatial ? "spatial" : "not spatial") << "\n";
  return spatial ? kExitOk : kExitPropertyFails;
}

int cmd_is_frame(const Options& opt) {
  const Fixture f = load_input(opt.inputs.at(0));
  require_valid(f);
  const bool frame = is_frame(need_msl(f));
  std::cout << (frame ? "frame" : "not a frame") << "\n";
  return frame ? kExitOk : kExitPropertyFails;
}

int cmd_enumerate(const Options& opt, const std::string& kind, Idx n) {
  uint64_t emitted = 0;
  std::set<std::string> seen;
  const auto emit = [&](const std::string& doc) {
    if (opt.dedup && !seen.insert(doc).second) return true;
    std::cout << doc << "\n";
    ++emitted;
    return !opt.seeded || emitted < opt.count;
  };

  if (opt.seeded) {
    for (uint64_t i = 0; i < opt.count; ++i) {
      const uint64_t seed = opt.seed + i;
      if (kind == "psg") {
        emit(print_psg(random_psg(n, seed)));
      } else if (kind == "topology") {
        emit(print_space(random_topology(n, seed)));
      } else if (kind == "msl") {
        emit(print_msl(random_msl(n, seed)));
      } else {
        throw Error(ErrorKind::Parse, "seeded sampling supports psg, topology, msl");
      }
    }
    return kExitOk;
  }

  if (kind == "psg") {
    enum_psgs(n, [&](const PartialSemigroup& psg) {
      return emit(opt.dedup ? print_psg(canonical_psg(psg).form)
                            : print_psg(psg));
    });
  } else if (kind == "topology") {
    enum_topologies(n, [&](const FinSpace& space) {
      return emit(opt.dedup ? print_space(canonical_space(space).form)
                            : print_space(space));
    });
  } else if (kind == "msl") {
    enum_msls(n, [&](const MeetSemilattice& msl) {
      return emit(opt.dedup ? print_msl(canonical_msl(msl).form)
                            : print_msl(msl));
    });
  } else if (kind == "monoid") {
    enum_monoids(n, [&](const PartialSemigroup& psg) {
      return emit(opt.dedup ? print_psg(canonical_psg(psg).form)
                            : print_psg(psg));
    });
  } else if (kind == "category") {
    enum_categories(n, n, [&](const FinCategory& cat) {
      return emit(opt.dedup ? print_category(canonical_category(cat).form)
                            : print_category(cat));
    });
  } else {
    throw Error(ErrorKind::Parse, "unknown enumeration kind: " + kind);
  }
  return kExitOk;
}

int cmd_suite() {
  const auto results = run_acceptance(std::cout);
  return all_passed(results) ? kExitOk : kExitPropertyFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite categories, partial semigroups and finite topologies"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "json, text or dot")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--point-variant", opt.point_variant, "literal or strict")
      ->check(CLI::IsMember({"literal", "strict"}));
  app.add_option("--max-search", opt.max_search, "candidate map bound");
  auto* seed_opt = app.add_option("--seed", opt.seed, "random sampling seed");
  app.add_option("--count", opt.count, "sample count for seeded streams");
  app.add_flag("--dedup", opt.dedup, "canonicalize and drop duplicates");

  std::string enum_kind;
  Idx enum_n = 2;

  // Flags like --format may follow the subcommand they modify.
  const auto add_input = [&](CLI::App* cmd, int count = 1) {
    cmd->fallthrough();
    cmd->add_option("input", opt.inputs, "file or fixture:<name>")
        ->expected(count)
        ->required();
  };

  auto* c_validate = app.add_subcommand("validate", "check structure axioms");
  add_input(c_validate);
  auto* c_idem = app.add_subcommand("idempotents", "list idempotents");
  add_input(c_idem);
  auto* c_kar = app.add_subcommand("karoubi", "idempotent completion");
  add_input(c_kar);
  auto* c_skel = app.add_subcommand("skeleton", "skeleton category");
  add_input(c_skel);
  auto* c_taut = app.add_subcommand("taut", "taut completion");
  add_input(c_taut);
  auto* c_is_taut = app.add_subcommand("is-taut", "skeletal and absolutely complete?");
  add_input(c_is_taut);
  auto* c_to_psg = app.add_subcommand("to-psg", "morphism semigroup");
  add_input(c_to_psg);
  auto* c_to_cat = app.add_subcommand("to-cat", "induced category");
  add_input(c_to_cat);
  c_to_cat->add_flag("--catale", opt.catale_view,
                     "objects from identities instead of idempotents");
  auto* c_is_catale = app.add_subcommand("is-catale", "check the catale axioms");
  add_input(c_is_catale);
  c_is_catale->add_option("--via", opt.via, "conversion applied first");
  auto* c_roundtrip = app.add_subcommand("roundtrip", "parse and reprint");
  add_input(c_roundtrip);
  auto* c_adj = app.add_subcommand("adjunction-verify",
                                   "transpose bijection between hom-sets");
  add_input(c_adj, 2);
  auto* c_opens = app.add_subcommand("opens", "open-set semilattice");
  add_input(c_opens);
  auto* c_points = app.add_subcommand("points", "abstract point space");
  add_input(c_points);
  auto* c_sob = app.add_subcommand("soberify", "points of the opens");
  add_input(c_sob);
  auto* c_spa = app.add_subcommand("spatialize", "opens of the points");
  add_input(c_spa);
  auto* c_is_sober = app.add_subcommand("is-sober", "unit a homeomorphism?");
  add_input(c_is_sober);
  auto* c_is_spatial = app.add_subcommand("is-spatial", "counit an order isomorphism?");
  add_input(c_is_spatial);
  auto* c_is_frame = app.add_subcommand("is-frame", "distributive complete lattice?");
  add_input(c_is_frame);
  auto* c_enum = app.add_subcommand("enumerate", "stream small structures");
  c_enum->fallthrough();
  c_enum->add_option("kind", enum_kind, "psg, topology, msl, monoid, category")
      ->required();
  c_enum->add_option("--n", enum_n, "carrier size");
  auto* c_suite = app.add_subcommand("suite", "run the acceptance criteria");
  c_suite->fallthrough();

  CLI11_PARSE(app, argc, argv);
  opt.seeded = seed_opt->count() > 0;

  try {
    if (c_validate->parsed()) return cmd_validate(opt);
    if (c_idem->parsed()) return cmd_idempotents(opt);
    if (c_kar->parsed()) return cmd_karoubi(opt);
    if (c_skel->parsed()) return cmd_skeleton(opt);
    if (c_taut->parsed()) return cmd_taut(opt);
    if (c_is_taut->parsed()) return cmd_is_taut(opt);
    if (c_to_psg->parsed()) return cmd_to_psg(opt);
    if (c_to_cat->parsed()) return cmd_to_cat(opt);
    if (c_is_catale->parsed()) return cmd_is_catale(opt);
    if (c_roundtrip->parsed()) return cmd_roundtrip(opt);
    if (c_adj->parsed()) return cmd_adjunction_verify(opt);
    if (c_opens->parsed()) return cmd_opens(opt);
    if (c_points->parsed()) return cmd_points(opt);
    if (c_sob->parsed()) return cmd_soberify(opt);
    if (c_spa->parsed()) return cmd_spatialize(opt);
    if (c_is_sober->parsed()) return cmd_is_sober(opt);
    if (c_is_spatial->parsed()) return cmd_is_spatial(opt);
    if (c_is_frame->parsed()) return cmd_is_frame(opt);
    if (c_enum->parsed()) return cmd_enumerate(opt, enum_kind, enum_n);
    if (c_suite->parsed()) return cmd_suite();
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return err.kind() == ErrorKind::Bound ? kExitBoundExceeded
                                          : kExitInvalidInput;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
