#include "cli.hpp"

#include "tropical/connectivity.hpp"
#include "tropical/error.hpp"
#include "tropical/io.hpp"
#include "tropical/polytope.hpp"
#include "tropical/polytope_algebra.hpp"
#include "tropical/stable_intersection.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace tropcalc {

using namespace tropical;

namespace {

int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::parse_error: return 2;
    case ErrorCategory::validation_error: return 3;
    case ErrorCategory::dimension_mismatch: return 4;
    case ErrorCategory::precondition_failed: return 5;
    case ErrorCategory::internal_error: return 6;
  }
  return 6;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  bool integer_only = false;
};

void check_integer(const Options& o, const TropicalCycle& x, const std::string& what) {
  if (o.integer_only && !x.has_integer_multiplicities())
    throw ValidationError(what + " has non-integer multiplicities");
}

void check_integer(const Options& o, const RationalPolytope& p, const std::string& what) {
  if (!o.integer_only) return;
  for (const auto& v : p.vertices())
    for (const auto& x : v)
      if (!is_integer(x)) throw ValidationError(what + " has non-lattice vertices");
}

TropicalCycle load_cycle(const Options& o, const std::string& path) {
  auto x = io::read_cycle(slurp(path));
  check_integer(o, x, path);
  return x;
}

TropicalCycle load_balanced(const Options& o, const std::string& path) {
  auto x = load_cycle(o, path);
  if (!is_balanced(x).balanced) throw ValidationError(path + " is not balanced");
  return x;
}

RationalPolytope load_polytope(const Options& o, const std::string& path) {
  auto p = io::read_polytope(slurp(path));
  check_integer(o, p, path);
  return p;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact stable intersection of tropical cycles"};
  app.require_subcommand(1);
  Options opts;
  app.add_flag("--integer-only", opts.integer_only, "Reject non-integer multiplicities and vertices");

  std::function<int()> action;
  std::string f1, f2, f3;
  std::vector<std::string> files;
  unsigned k = 0;
  bool explain = false, oracle = false;

  auto* cb = app.add_subcommand("check-balanced", "Check the balancing condition of a cycle");
  cb->add_option("cycle", f1, "Cycle document")->required();
  cb->callback([&] {
    action = [&] {
      const auto r = is_balanced(load_cycle(opts, f1));
      out << io::write_balance_report(r);
      return r.balanced ? 0 : 1;
    };
  });

  auto* si = app.add_subcommand("stable-intersect", "Stable intersection of two cycles");
  si->add_option("x", f1, "First cycle")->required();
  si->add_option("y", f2, "Second cycle")->required();
  si->add_flag("--explain", explain, "Print contributing pairs and the generic vector");
  si->add_flag("--oracle", oracle, "Cross-check against the perturbation and diagonal computations");
  si->callback([&] {
    action = [&] {
      const auto x = load_balanced(opts, f1);
      const auto y = load_balanced(opts, f2);
      const auto report = stable_intersection_report(x, y);
      if (oracle) {
        const auto diag = diagonal_intersection(x, y);
        if (!cycles_equal(diag, report.result)) throw InternalError("diagonal computation disagrees");
        if (x.is_fan() && y.is_fan()) {
          const auto pert = perturbation_oracle(x, y, oracle_generic_vector(x, y), 1);
          if (!cycles_equal(pert.limit, report.result)) throw InternalError("perturbation limit disagrees");
        }
      }
      out << (explain ? io::write_intersection_report(report) : io::write_cycle(report.result));
      return 0;
    };
  });

  auto* hs = app.add_subcommand("hypersurface", "Tropical hypersurface of a polytope");
  hs->add_option("polytope", f1, "Polytope document")->required();
  hs->callback([&] {
    action = [&] {
      out << io::write_cycle(tropical_hypersurface(load_polytope(opts, f1)));
      return 0;
    };
  });

  auto* pw = app.add_subcommand("power", "k-fold stable self-intersection");
  pw->add_option("cycle", f1, "Cycle document")->required();
  pw->add_option("k", k, "Exponent")->required();
  pw->callback([&] {
    action = [&] {
      out << io::write_cycle(stable_power(load_balanced(opts, f1), k));
      return 0;
    };
  });

  auto* vol = app.add_subcommand("volume", "Normalized lattice volume of a polytope");
  vol->add_option("polytope", f1, "Polytope document")->required();
  vol->callback([&] {
    action = [&] {
      out << io::write_rational(normalized_volume(load_polytope(opts, f1))) << "\n";
      return 0;
    };
  });

  auto* mv = app.add_subcommand("mixed-volume", "Mixed volume of n polytopes in R^n");
  mv->add_option("polytopes", files, "Polytope documents")->required();
  mv->callback([&] {
    action = [&] {
      std::vector<RationalPolytope> ps;
      for (const auto& f : files) ps.push_back(load_polytope(opts, f));
      out << io::write_rational(mixed_volume(ps)) << "\n";
      return 0;
    };
  });

  auto* pf = app.add_subcommand("pushforward", "Push a cycle forward along an integer matrix");
  pf->add_option("matrix", f1, "Matrix document")->required();
  pf->add_option("cycle", f2, "Cycle document")->required();
  pf->callback([&] {
    action = [&] {
      const auto a = io::read_matrix(slurp(f1));
      out << io::write_cycle(pushforward(a, load_balanced(opts, f2)));
      return 0;
    };
  });

  auto* cs = app.add_subcommand("cycle-sum", "Sum of two cycles of equal dimension");
  cs->add_option("x", f1, "First cycle")->required();
  cs->add_option("y", f2, "Second cycle")->required();
  cs->callback([&] {
    action = [&] {
      out << io::write_cycle(cycle_sum(load_cycle(opts, f1), load_cycle(opts, f2)));
      return 0;
    };
  });

  auto* cn = app.add_subcommand("connectivity", "Connectivity through codimension one");
  cn->add_option("cycle", f1, "Cycle document")->required();
  cn->callback([&] {
    action = [&] {
      out << io::write_connectivity_report(is_connected_codim1(load_cycle(opts, f1)));
      return 0;
    };
  });

  auto* dc = app.add_subcommand("decompose", "Decompose a cycle into products of hypersurfaces on a fan");
  dc->add_option("cycle", f1, "Cycle document")->required();
  dc->add_option("fan", f2, "Reference fan document")->required();
  dc->callback([&] {
    action = [&] {
      const auto x = load_balanced(opts, f1);
      const auto basis = build_hypersurface_basis(io::read_fan(slurp(f2)));
      out << io::write_decomposition(decompose_into_powers(x, basis), basis);
      return 0;
    };
  });

  auto* ex = app.add_subcommand("example-6-2", "Run the connectivity counterexample in R^5");
  ex->callback([&] {
    action = [&] {
      const auto r = example_6_2();
      out << io::write_example_6_2(r);
      return r.all_claims_hold() ? 0 : 6;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    return action ? action() : 1;
  } catch (const Error& e) {
    err << io::write_error(to_string(e.category()), e.what());
    return exit_code(e.category());
  } catch (const std::exception& e) {
    err << io::write_error("internal_error", e.what());
    return 6;
  }
}

}  // namespace tropcalc
