#include "folkman/cnf.hpp"

#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace folkman {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

VarMeaning parse_meaning(std::istringstream& fields) {
  std::string kind;
  fields >> kind;
  if (kind == "edge_color") {
    EdgeColorVar m;
    if (fields >> m.edge.u >> m.edge.v >> m.color) return m;
  } else if (kind == "vertex_part") {
    VertexPartVar m;
    if (fields >> m.vertex >> m.part) return m;
  } else if (kind == "edge_binary") {
    EdgeBinaryVar m;
    if (fields >> m.edge.u >> m.edge.v) return m;
  } else if (kind == "none") {
    return std::monostate{};
  }
  throw CnfError("unreadable variable meaning \"" + fields.str() + "\"");
}

}  // namespace

bool Cnf::well_formed(bool require_meanings) const {
  if (num_vars < 0) return false;
  if (require_meanings && var_map.size() != static_cast<std::size_t>(num_vars) + 1) return false;
  for (const auto& c : clauses) {
    if (c.empty()) return false;
    for (Literal l : c) {
      if (l == 0 || std::abs(l) > num_vars) return false;
      if (require_meanings && std::holds_alternative<std::monostate>(var_map[static_cast<std::size_t>(std::abs(l))]))
        return false;
    }
  }
  return true;
}

bool verify_model(const Cnf& cnf, const Model& model) {
  if (model.size() < static_cast<std::size_t>(cnf.num_vars) + 1) return false;
  for (const auto& c : cnf.clauses) {
    bool satisfied = false;
    for (Literal l : c) {
      const bool value = model[static_cast<std::size_t>(std::abs(l))];
      if ((l > 0) == value) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

std::vector<std::size_t> falsified_clauses(const Cnf& cnf, const PartialAssignment& assignment) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
    bool all_false = true;
    for (Literal l : cnf.clauses[i]) {
      const auto idx = static_cast<std::size_t>(std::abs(l));
      if (idx >= assignment.size() || !assignment[idx] || *assignment[idx] == (l > 0)) {
        all_false = false;
        break;
      }
    }
    if (all_false) out.push_back(i);
  }
  return out;
}

std::string describe(const VarMeaning& meaning) {
  return std::visit(
      overloaded{
          [](std::monostate) { return std::string("none"); },
          [](const EdgeColorVar& m) {
            return "edge_color " + std::to_string(m.edge.u) + " " + std::to_string(m.edge.v) + " " +
                   std::to_string(m.color);
          },
          [](const VertexPartVar& m) {
            return "vertex_part " + std::to_string(m.vertex) + " " + std::to_string(m.part);
          },
          [](const EdgeBinaryVar& m) {
            return "edge_binary " + std::to_string(m.edge.u) + " " + std::to_string(m.edge.v);
          },
      },
      meaning);
}

std::string write_dimacs(const Cnf& cnf, bool with_comments) {
  std::ostringstream out;
  if (with_comments) {
    for (int v = 1; v <= cnf.num_vars; ++v) {
      const auto idx = static_cast<std::size_t>(v);
      out << "c var " << v << ' ' << describe(idx < cnf.var_map.size() ? cnf.var_map[idx] : VarMeaning{}) << '\n';
    }
  }
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& c : cnf.clauses) {
    for (Literal l : c) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

Cnf parse_dimacs(std::istream& in) {
  Cnf cnf;
  long declared_clauses = -1;
  Clause current;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == 'c') {
      std::istringstream fields(line.substr(1));
      std::string tag;
      int var = 0;
      if (declared_clauses < 0 && fields >> tag && tag == "var" && fields >> var && var >= 1) {
        if (cnf.var_map.size() <= static_cast<std::size_t>(var)) cnf.var_map.resize(static_cast<std::size_t>(var) + 1);
        cnf.var_map[static_cast<std::size_t>(var)] = parse_meaning(fields);
      }
      continue;
    }
    if (line[0] == 'p') {
      std::istringstream fields(line);
      std::string p;
      std::string fmt;
      long vars = -1;
      if (declared_clauses >= 0 || !(fields >> p >> fmt >> vars >> declared_clauses) || fmt != "cnf" || vars < 0 ||
          declared_clauses < 0)
        throw CnfError("DIMACS line " + std::to_string(line_no) + ": bad problem line");
      cnf.num_vars = static_cast<int>(vars);
      continue;
    }
    if (declared_clauses < 0) throw CnfError("DIMACS line " + std::to_string(line_no) + ": clause before header");
    std::istringstream fields(line);
    long lit = 0;
    while (fields >> lit) {
      if (lit == 0) {
        if (current.empty()) throw CnfError("DIMACS line " + std::to_string(line_no) + ": empty clause");
        cnf.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (std::labs(lit) > cnf.num_vars)
          throw CnfError("DIMACS line " + std::to_string(line_no) + ": literal " + std::to_string(lit) +
                         " exceeds declared variable count");
        current.push_back(static_cast<Literal>(lit));
      }
    }
    if (!fields.eof()) throw CnfError("DIMACS line " + std::to_string(line_no) + ": non-numeric token");
  }
  if (declared_clauses < 0) throw CnfError("DIMACS input has no problem line");
  if (!current.empty()) throw CnfError("DIMACS input ends inside a clause");
  if (static_cast<long>(cnf.clauses.size()) != declared_clauses)
    throw CnfError("DIMACS header declares " + std::to_string(declared_clauses) + " clauses but " +
                   std::to_string(cnf.clauses.size()) + " were read");
  cnf.var_map.resize(static_cast<std::size_t>(cnf.num_vars) + 1);
  return cnf;
}

void write_var_map(std::ostream& out, const Cnf& cnf) {
  for (int v = 1; v <= cnf.num_vars; ++v) out << v << ' ' << describe(cnf.var_map[static_cast<std::size_t>(v)]) << '\n';
}

std::vector<VarMeaning> read_var_map(std::istream& in) {
  std::vector<VarMeaning> out{std::monostate{}};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    int var = 0;
    if (!(fields >> var) || var != static_cast<int>(out.size()))
      throw CnfError("var map line \"" + line + "\" is out of sequence");
    out.push_back(parse_meaning(fields));
  }
  return out;
}

SolverOutput parse_solver_output(std::istream& in) {
  SolverOutput out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream fields(line);
    if (line[0] == 's') {
      std::string s;
      std::string word;
      fields >> s >> word;
      if (word == "SATISFIABLE") out.status = SolverStatus::satisfiable;
      else if (word == "UNSATISFIABLE") out.status = SolverStatus::unsatisfiable;
      else out.status = SolverStatus::unknown;
      continue;
    }
    if (line[0] == 'v') fields.ignore(1);
    long lit = 0;
    while (fields >> lit)
      if (lit != 0) out.values.push_back(static_cast<Literal>(lit));
  }
  return out;
}

Model model_from_values(int num_vars, const std::vector<Literal>& values) {
  Model model(static_cast<std::size_t>(num_vars) + 1, false);
  std::vector<bool> seen(static_cast<std::size_t>(num_vars) + 1, false);
  for (Literal l : values) {
    const auto idx = static_cast<std::size_t>(std::abs(l));
    if (idx == 0 || idx > static_cast<std::size_t>(num_vars)) continue;
    model[idx] = l > 0;
    seen[idx] = true;
  }
  for (int v = 1; v <= num_vars; ++v)
    if (!seen[static_cast<std::size_t>(v)]) throw CnfError("model leaves variable " + std::to_string(v) + " unassigned");
  return model;
}

}  // namespace folkman
