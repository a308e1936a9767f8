#include "maxcms/commands.hpp"

#include <fstream>
#include <iostream>
#include <random>

#include "maxcms/errors.hpp"
#include "maxcms/flow.hpp"
#include "maxcms/generate.hpp"
#include "maxcms/satgen.hpp"
#include "maxcms/specgraph.hpp"

namespace maxcms {
namespace {

int write_output(const std::string& text, const std::optional<std::string>& output, std::ostream& out,
                 std::ostream& err) {
  if (!output) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(*output, std::ios::binary);
  if (!file) {
    err << "error: cannot write '" << *output << "'\n";
    return kExitFailure;
  }
  file << text;
  return file ? kExitOk : kExitFailure;
}

}  // namespace

Algorithm parse_algorithm(const std::string& name) {
  if (name == "exact") return Algorithm::kExact;
  if (name == "flow") return Algorithm::kFlow;
  if (name == "approx2") return Algorithm::kApprox2;
  throw InvalidInput("unknown algorithm '" + name + "'");
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kExact: return "exact";
    case Algorithm::kFlow: return "flow";
    case Algorithm::kApprox2: return "approx2";
  }
  return "?";
}

SolutionFile solve(const Instance& inst, const SolveOptions& options) {
  switch (options.algorithm) {
    case Algorithm::kExact: {
      ExactResult r = brute_force_maxcms(inst, options.exact_limit);
      return make_solution(inst, "exact", r.best_set);
    }
    case Algorithm::kFlow: {
      if (!inst.realizer() || inst.realizer()->dimension() != 1)
        throw AlgorithmMismatch("flow requires a total label order (kind \"total\")");
      SpecialGraph g = decompose_edges(inst);
      WeightedSet best = max_wcut_is(g.n, g.weights, (*g.parts)[0]);
      std::vector<std::size_t> kept;
      for (std::size_t v = 0; v < g.n; ++v)
        if (best.members[v]) kept.push_back(v);
      return make_solution(inst, "flow", kept);
    }
    case Algorithm::kApprox2: {
      if (!inst.realizer() || inst.realizer()->dimension() != 2)
        throw AlgorithmMismatch("approx2 requires a two-chain label order (kind \"realizer2\")");
      std::optional<Rational> optimum;
      if (inst.size() <= options.report_optimum_limit)
        optimum = brute_force_maxcms(inst, options.report_optimum_limit).best_weight;
      EpsilonSolveOptions eo;
      eo.epsilon = options.epsilon;
      Approx2Result r = solve_approx2(inst, eo, optimum);
      return make_solution(inst, "approx2", r.rounding.kept, r.report);
    }
  }
  throw std::logic_error("unreachable");
}

int cmd_solve(const std::string& input, const SolveOptions& options,
              const std::optional<std::string>& output, std::ostream& out, std::ostream& err) {
  try {
    Instance inst = read_instance_file(input);
    SolutionFile s = solve(inst, options);
    return write_output(dump_document(solution_to_json(s)), output, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const AlgorithmMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitSizeLimit;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int cmd_generate(const GenerateOptions& options, const std::optional<std::string>& output,
                 std::ostream& out, std::ostream& err) {
  try {
    nlohmann::json doc;
    if (options.kind == "random") {
      RandomInstanceParams p;
      p.objects = options.n;
      p.labels = options.m;
      p.dimension = options.dimension;
      p.noise = options.noise;
      doc = random_instance_document(p, options.seed);
    } else if (options.kind == "sat") {
      Cnf3 f;
      if (options.cnf_path) {
        std::ifstream in(*options.cnf_path);
        if (!in) throw ParseError("cannot open '" + *options.cnf_path + "'");
        f = parse_dimacs(in);
      } else {
        std::mt19937_64 rng(options.seed);
        f = random_cnf3(options.n, options.m, rng);
      }
      doc = gadget_document(f);
    } else {
      throw InvalidInput("unknown generate kind '" + options.kind + "'");
    }
    return write_output(dump_document(doc), output, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int cmd_check(const std::string& input, const std::vector<std::string>& subset, std::ostream& out,
              std::ostream& err) {
  try {
    Instance inst = read_instance_file(input);
    std::vector<std::size_t> indices;
    for (const auto& id : subset) {
      if (id.empty()) continue;
      auto i = inst.index_of(id);
      if (!i) throw ParseError("unknown object id '" + id + "'");
      indices.push_back(*i);
    }
    if (auto v = find_violation(inst, indices)) {
      const auto& a = inst.object(v->first);
      const auto& b = inst.object(v->second);
      out << "violation: " << a.id << " >= " << b.id << " but label " << inst.labels()[a.label]
          << " is not >= " << inst.labels()[b.label] << '\n';
      return kExitFailure;
    }
    out << "acceptable\n";
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace maxcms
