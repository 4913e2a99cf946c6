#include "qtriad/cli.hpp"

#include <CLI11.hpp>
#include <bit>
#include <sstream>

#include "qtriad/examples.hpp"
#include "qtriad/report.hpp"

namespace qtriad {

namespace {

struct Options {
  std::string format = "text";
  std::optional<std::uint64_t> max_space;
  std::uint64_t seed = 0;
  bool quiet = false;
};

Limits limits_for(const Options& o) {
  Limits l;
  if (!o.max_space) return l;
  const std::uint64_t n = std::max<std::uint64_t>(*o.max_space, 1);
  l.morphism_candidates = n;
  // 2^64 subsets do not fit; the largest value stands for no bound.
  l.tensor_pairs = n == std::numeric_limits<std::uint64_t>::max() ? 64 : std::size_t(std::bit_width(n) - 1);
  l.law_triples = n;
  l.max_elements = std::size_t(std::min<std::uint64_t>(n, std::numeric_limits<std::size_t>::max()));
  return l;
}

std::string summary(const Violations& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size() && i < 5; ++i) s += (i ? "; " : "") + vs[i].str();
  if (vs.size() > 5) s += "; ...";
  return s;
}

struct Input {
  Document doc;
  Loaded loaded;
};

Input load(const std::string& path, const Limits& limits) {
  Input in;
  in.doc = read_document(path);
  in.loaded = load_document(in.doc, limits);
  return in;
}

const Triad& need_triad(const Input& in, const std::string& path) {
  if (in.doc.kind != "triad" && in.doc.kind != "solution" && in.doc.kind != "involution")
    throw InputError(path + " holds a " + in.doc.kind + ", not a triad");
  if (!in.loaded.triad)
    throw InputError(path + " does not hold a valid triad: " + summary(in.loaded.violations));
  return *in.loaded.triad;
}

const Json& triad_payload(const Document& d) {
  return d.kind == "triad" ? d.payload : d.payload.at("triad");
}

void fail_on(Verdict& v, Violations vs) {
  v.pass = vs.empty();
  v.witnesses = std::move(vs);
}

// Runs a check; a DefectError raised inside becomes a failing verdict.
template <class F>
void guarded(Report& r, const std::string& name, F&& body) {
  r.run(name, [&](Verdict& v) {
    try {
      body(v);
    } catch (const DefectError& e) {
      v.pass = false;
      v.witnesses.push_back({"Defect", name, {}, e.what()});
    }
  });
}

struct Built {
  Q0 q0;
  Q1 q1;
  CanonicalCouple c;
};

Built build_all(const TriadPtr& t, const Limits& limits) {
  Built b{build_q0(t, limits), build_q1(t, limits), {}};
  b.c = phi_map(b.q0, b.q1);
  return b;
}

Json sizes(const Triad& t) {
  return Json{{"T", t.lat_T().size()}, {"L", t.lat_L().size()}, {"R", t.lat_R().size()}};
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

// --- commands --------------------------------------------------------------

void cmd_validate(Report& r, const std::string& path, const Limits& limits) {
  auto in = load(path, limits);
  r.run(in.doc.kind + " laws", [&](Verdict& v) {
    fail_on(v, in.loaded.violations);
    const auto& l = in.loaded;
    if (l.lattice) v.info["size"] = l.lattice->size();
    if (l.quantale) v.info["size"] = l.quantale->size();
    if (l.module) v.info["size"] = l.module->carrier->size();
    if (l.triad) v.info["sizes"] = sizes(*l.triad);
    if (l.solution) v.info["Q"] = l.solution->Q->size();
  });
}

void cmd_solve(Report& r, const std::string& path, const std::string& which,
               const std::string& emit, const Options& o) {
  const Limits limits = limits_for(o);
  auto in = load(path, limits);
  const Triad& t = need_triad(in, path);
  const TriadPtr tp = in.loaded.triad;
  auto one = [&](const std::string& name, auto&& build) {
    guarded(r, name + " solution laws", [&](Verdict& v) {
      const Solution s = build();
      fail_on(v, validate_solution(t, s));
      v.info["size"] = s.Q->size();
      v.info["join_irreducibles"] = s.Q->carrier->ji_count();
      auto doc = solution_document(t, s);
      if (!emit.empty()) write_document(which == "both" ? with_suffix(emit, "." + name) : emit, doc);
      if (o.format == "machine") r.structures.emplace_back(name, std::move(doc));
    });
  };
  if (which == "q0" || which == "both") one("q0", [&] { return build_q0(tp, limits).solution; });
  if (which == "q1" || which == "both") one("q1", [&] { return build_q1(tp, limits).solution; });
}

void cmd_check(Report& r, const std::string& path, const std::vector<std::string>& props,
               const Limits& limits) {
  auto in = load(path, limits);
  const Triad& t = need_triad(in, path);
  const auto preds = triad_predicates(t);
  auto failures = [&](std::initializer_list<const char*> kinds) {
    Violations out;
    for (const auto& f : preds.failures)
      for (const char* k : kinds)
        if (f.kind == k) out.push_back(f);
    return out;
  };
  for (const auto& p : props) {
    if (p == "strong") {
      r.run("strong", [&](Verdict& v) {
        v.pass = preds.strong;
        v.witnesses = failures({"NotStrong"});
      });
    } else if (p == "strict") {
      r.run("strict", [&](Verdict& v) {
        v.pass = preds.strict;
        v.witnesses = failures({"NotStrong", "NotUnital", "UnitMismatch"});
      });
    } else if (p == "central") {
      r.run("central", [&](Verdict& v) {
        v.pass = preds.central;
        v.witnesses = failures({"NotCentral"});
      });
    } else if (p == "girard") {
      r.run("girard", [&](Verdict& v) {
        const auto gs = girard_triad_structure(t);
        v.pass = !gs.empty();
        Json ds = Json::array();
        for (const auto& g : gs) ds.push_back(g.d);
        v.info["d"] = ds;
        if (!v.pass)
          v.witnesses.push_back({"NotGirard", "", {},
                                 "no cyclic d makes l -> l^perp and r -> r^perp inverse dualities"});
      });
    } else if (p == "involutive") {
      r.run("involutive", [&](Verdict& v) {
        if (in.doc.kind == "involution") {
          v.pass = in.loaded.involution.has_value();
          v.witnesses = in.loaded.violations;
          v.info["source"] = "document";
          return;
        }
        const auto found = search_triad_involutions(t, limits.morphism_candidates);
        v.pass = !found.empty();
        v.info["source"] = "search";
        v.info["found"] = found.size();
        if (!v.pass) v.witnesses.push_back({"NoInvolution", "", {}, "exhaustive search found none"});
      });
    } else {
      throw InputError("unknown property '" + p + "'");
    }
  }
}

void verify_sol(Report& r, const Input& in, const Limits& limits) {
  const Triad& t = *in.loaded.triad;
  const auto b = build_all(in.loaded.triad, limits);
  guarded(r, "Q0 solution laws", [&](Verdict& v) {
    fail_on(v, validate_solution(t, b.q0.solution));
    v.info["size"] = b.q0.size();
  });
  guarded(r, "Q1 solution laws", [&](Verdict& v) {
    fail_on(v, validate_solution(t, b.q1.solution));
    v.info["size"] = b.q1.size();
  });
  guarded(r, "couple Q0 -> Q1", [&](Verdict& v) {
    const auto res = validate_couple(b.c.couple);
    fail_on(v, res.violations);
    v.info["unital"] = res.unital;
    if (!res.unital) {
      v.pass = false;
      v.witnesses.push_back({"NotUnital", "couple", {}, "(id, id) does not act as the unit"});
    }
  });
  auto through = [&](const std::string& name, const Solution& s, const LatticeMap* must_be_id) {
    guarded(r, "factorization through " + name, [&](Verdict& v) {
      const auto f = solution_to_factorization(b.q0, b.q1, s);
      auto vs = validate_factorization(b.q0, b.q1, b.c, f);
      if (must_be_id && must_be_id->table != identity_map(must_be_id->source).table)
        vs.push_back({"PropertyMismatch", "identity", {}, "expected the identity map"});
      fail_on(v, std::move(vs));
      v.info["K"] = f.K->size();
      const bool round = same_solution(factorization_to_solution(b.q0, b.q1, f), s);
      v.info["round_trip"] = round;
      if (!round) {
        v.pass = false;
        v.witnesses.push_back({"RoundTrip", name, {}, "solution -> factorization -> solution differs"});
      }
    });
  };
  {
    const auto f0 = solution_to_factorization(b.q0, b.q1, b.q0.solution);
    through("Q0", b.q0.solution, &f0.phi0);
    const auto f1 = solution_to_factorization(b.q0, b.q1, b.q1.solution);
    through("Q1", b.q1.solution, &f1.phi1);
  }
  if (in.loaded.solution) through("given solution", *in.loaded.solution, nullptr);
}

void verify_str(Report& r, const Input& in, const Limits& limits) {
  const auto b = build_all(in.loaded.triad, limits);
  const Solution* extra = in.loaded.solution ? &*in.loaded.solution : nullptr;
  const auto rep = check_prop_str(b.q0, b.q1, b.c, extra);
  r.run("phi strong iff triad strong", [&](Verdict& v) {
    v.pass = rep.phi_strong == rep.triad_strong;
    v.info["phi_strong"] = rep.phi_strong;
    v.info["triad_strong"] = rep.triad_strong;
    for (const auto& w : rep.violations)
      if (w.tag == "phi strong iff triad strong") v.witnesses.push_back(w);
  });
  if (!rep.isos) return;
  r.run("sided isomorphisms", [&](Verdict& v) {
    Violations vs;
    for (const auto& w : rep.violations)
      if (w.tag != "phi strong iff triad strong") vs.push_back(w);
    fail_on(v, std::move(vs));
    const auto& s = *rep.isos;
    v.info["R(Q0)"] = s.right_q0;
    v.info["R(Q1)"] = s.right_q1;
    v.info["L(Q0)"] = s.left_q0;
    v.info["L(Q1)"] = s.left_q1;
    v.info["T(Q0)"] = s.two_q0;
    v.info["T(Q1)"] = s.two_q1;
    v.info["T_strictly_two_sided"] = s.t_strictly_two_sided;
  });
}

void verify_gir(Report& r, const Input& in, const Limits& limits) {
  const Triad& t = *in.loaded.triad;
  const auto gs = girard_triad_structure(t);
  if (gs.empty()) throw InputError("NotGirardTriad: no Girard structure on this triad");
  const auto b = build_all(in.loaded.triad, limits);
  for (const auto& g : gs)
    guarded(r, "gir d=" + std::to_string(g.d), [&](Verdict& v) {
      const auto rep = girard_verify(b.q0, b.q1, b.c, g);
      fail_on(v, rep.violations);
      v.info["d_T"] = g.d;
      v.info["d_Q"] = rep.d_q;
      v.info["endomorphisms"] = rep.endo_count;
      v.info["Q0"] = b.q0.size();
      v.info["Q1"] = b.q1.size();
    });
}

void verify_involutive(Report& r, const Input& in, const Limits& limits) {
  if (!in.loaded.involution)
    throw InputError("the involutive theorem needs an involution document");
  const auto b = build_all(in.loaded.triad, limits);
  guarded(r, "involutive solutions", [&](Verdict& v) {
    const auto res = involutive_solutions(b.q0, b.q1, b.c, *in.loaded.involution);
    fail_on(v, res.violations);
    v.info["star_Q0"] = res.star_q0;
    v.info["star_Q1"] = res.star_q1;
  });
}

void verify_central(Report& r, const Input& in, const Limits& limits) {
  const auto b = build_all(in.loaded.triad, limits);
  guarded(r, "central maps", [&](Verdict& v) {
    const auto m = central_maps(b.q0, b.q1, b.c);
    fail_on(v, m.violations);
    v.info["zeta"] = m.zeta;
    v.info["tau_adjoint"] = m.tau_adj;
  });
}

void verify_consequences(Report& r, const Input& in, const Limits& limits) {
  const auto q1 = build_q1(in.loaded.triad, limits);
  guarded(r, "girard consequences", [&](Verdict& v) {
    const auto g = girard_consequences(q1);
    fail_on(v, g.violations);
    v.info["Q1_strictly_faithful"] = g.strictly_faithful;
    v.info["T_distributive"] = g.t_distributive;
    v.info["Q1_distributive"] = g.q1_distributive;
  });
}

void cmd_verify(Report& r, const std::string& path, const std::string& theorem,
                const Limits& limits) {
  auto in = load(path, limits);
  need_triad(in, path);
  if (in.doc.kind != "triad" && !in.loaded.violations.empty())
    throw InputError(path + " is not valid: " + summary(in.loaded.violations));
  if (theorem == "sol") verify_sol(r, in, limits);
  else if (theorem == "str") verify_str(r, in, limits);
  else if (theorem == "gir") verify_gir(r, in, limits);
  else if (theorem == "involutive") verify_involutive(r, in, limits);
  else if (theorem == "central") verify_central(r, in, limits);
  else if (theorem == "girard-consequences") verify_consequences(r, in, limits);
  else throw InputError("unknown theorem '" + theorem + "'");
}

void cmd_factorize(Report& r, const std::string& triad_path, const std::string& sol_path,
                   const Options& o) {
  const Limits limits = limits_for(o);
  auto tin = load(triad_path, limits);
  need_triad(tin, triad_path);
  auto sin = load(sol_path, limits);
  if (sin.doc.kind != "solution") throw InputError(sol_path + " is not a solution document");
  if (triad_payload(sin.doc) != triad_payload(tin.doc))
    throw InputError(sol_path + " is a solution of a different triad");
  r.run("solution laws", [&](Verdict& v) { fail_on(v, sin.loaded.violations); });
  if (!sin.loaded.solution) return;
  const auto b = build_all(tin.loaded.triad, limits);
  const Solution& s = *sin.loaded.solution;
  guarded(r, "factorization", [&](Verdict& v) {
    const auto f = solution_to_factorization(b.q0, b.q1, s);
    fail_on(v, validate_factorization(b.q0, b.q1, b.c, f));
    v.info["K"] = f.K->size();
    v.info["phi0"] = f.phi0.table;
    v.info["phi1"] = f.phi1.table;
    if (o.format == "machine") r.structures.emplace_back("K", quantale_document(*f.K));
  });
  guarded(r, "round trip", [&](Verdict& v) {
    const auto f = solution_to_factorization(b.q0, b.q1, s);
    v.pass = same_solution(factorization_to_solution(b.q0, b.q1, f), s);
    if (!v.pass) v.witnesses.push_back({"RoundTrip", "", {}, "factorization does not give back the solution"});
  });
}

void cmd_generate(Report& r, const ExampleSpec& spec, const std::string& emit, bool involution) {
  const auto g = generate_example(spec);
  r.run("generate " + spec.family, [&](Verdict& v) {
    v.pass = true;
    v.info["description"] = g.description;
    v.info["sizes"] = sizes(*g.triad);
    v.info["involution"] = g.involution.has_value();
  });
  if (emit.empty()) return;
  if (involution && !g.involution)
    throw InputError("family " + spec.family + " with these parameters has no involution");
  write_document(emit, involution ? involution_document(*g.triad, *g.involution)
                                  : triad_document(*g.triad));
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string x; std::getline(ss, x, ',');)
    if (!x.empty()) out.push_back(x);
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite triads, their solutions and the theorems relating them.", "qtriad"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::uint64_t max_space = 0;
  auto* ms = app.add_option("--max-space", max_space, "Bound for every size guard");
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--seed", o.seed, "Reserved; generators are deterministic");
  app.add_flag("--quiet", o.quiet, "Print failures only");

  std::string file, file2, which = "both", emit, props = "strong,strict,central,girard,involutive",
                           theorem;
  auto* validate = app.add_subcommand("validate", "Check a structure document");
  validate->add_option("file", file)->required();

  auto* solve = app.add_subcommand("solve", "Build Q0 and Q1 for a triad");
  solve->add_option("file", file)->required();
  solve->add_option("--which", which)->check(CLI::IsMember({"q0", "q1", "both"}));
  solve->add_option("--emit", emit, "Write solution documents (both: .q0/.q1 suffixes)");

  auto* check = app.add_subcommand("check", "Decide triad properties");
  check->add_option("file", file)->required();
  check->add_option("--props", props, "Comma list of strong,strict,central,girard,involutive");

  auto* verify = app.add_subcommand("verify", "Verify a theorem on a triad");
  verify->add_option("file", file)->required();
  verify->add_option("--theorem", theorem)
      ->required()
      ->check(CLI::IsMember({"sol", "str", "gir", "involutive", "central", "girard-consequences"}));

  auto* factorize = app.add_subcommand("factorize", "Factor a solution through Q0 -> K -> Q1");
  factorize->add_option("triad", file)->required();
  factorize->add_option("solution", file2)->required();

  ExampleSpec spec;
  bool with_involution = false;
  auto* generate = app.add_subcommand("generate", "Generate an example triad");
  generate->add_option("family", spec.family)->required();
  generate->add_option("--shape", spec.shape, "chain, boolean, mo or mo2x2");
  generate->add_option("--size", spec.size);
  generate->add_option("--shape2", spec.shape2);
  generate->add_option("--size2", spec.size2);
  generate->add_option("--map", spec.map, "galois f as a comma list")->delimiter(',');
  generate->add_option("--adjoint", spec.adjoint, "galois g as a comma list")->delimiter(',');
  generate->add_option("--quantale", spec.quantale, "sided: frame, endo or c");
  generate->add_option("--emit", emit, "Write the triad document");
  generate->add_flag("--involution", with_involution, "Emit an involution document instead");

  std::vector<std::string> argv_s{"qtriad"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_s) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error (Usage): " << e.what() << "\n";
    return 2;
  }
  if (*ms) o.max_space = max_space;

  Report r;
  const Limits limits = limits_for(o);
  try {
    if (*validate) {
      r.command = "validate";
      cmd_validate(r, file, limits);
    } else if (*solve) {
      r.command = "solve";
      cmd_solve(r, file, which, emit, o);
    } else if (*check) {
      r.command = "check";
      cmd_check(r, file, split(props), limits);
    } else if (*verify) {
      r.command = "verify " + theorem;
      cmd_verify(r, file, theorem, limits);
    } else if (*factorize) {
      r.command = "factorize";
      cmd_factorize(r, file, file2, o);
    } else if (*generate) {
      r.command = "generate";
      cmd_generate(r, spec, emit, with_involution);
    }
    r.exit_code = r.all_pass() ? 0 : 1;
  } catch (const DocumentError& e) {
    r.error_kind = e.kind();
    r.error = e.what();
    r.exit_code = 2;
  } catch (const ExampleError& e) {
    r.error_kind = e.kind();
    r.error = e.what();
    r.exit_code = 2;
  } catch (const InputError& e) {
    r.error_kind = "Input";
    r.error = e.what();
    r.exit_code = 2;
  } catch (const SearchSpaceExceeded& e) {
    r.error_kind = "SearchSpaceExceeded";
    r.error = e.what();
    r.exit_code = 3;
  } catch (const DefectError& e) {
    r.run("construction", [&](Verdict& v) {
      v.pass = false;
      v.witnesses.push_back({"Defect", "", {}, e.what()});
    });
    r.exit_code = 1;
  }
  out << (o.format == "machine" ? render_machine(r) : render_text(r, o.quiet));
  return r.exit_code;
}

}  // namespace qtriad
