// Command-line front end: type classification, involution matrices,
// generator catalogs, membership checking, normalization, unimodular
// decomposition, and the worked non-member demonstration.
//
// Exit codes: 0 success / member, 1 non-member, 2 input error, 3 search
// budget exhausted.

#include <iostream>
#include <string>
#include <vector>

#include "realmod/decompose.hpp"
#include "realmod/induced.hpp"
#include "realmod/matrix.hpp"
#include "realmod/membership.hpp"
#include "realmod/surface.hpp"
#include "realmod/textio.hpp"
#include "realmod/theta.hpp"
#include "realmod/words.hpp"

namespace {

using namespace realmod;

struct Options {
  std::string command;
  std::vector<std::string> positional;
  std::string type;
  std::string in = "-";
  bool homology = false;
  bool machine = false;
};

void usage(std::ostream& out) {
  out << "usage: realmod <command> [options]\n"
         "\n"
         "commands:\n"
         "  types <genus>         list the topological types for a genus\n"
         "  sigma --type T        print the induced involution matrix\n"
         "  check --type T [--in FILE]\n"
         "                        run the membership test on a matrix\n"
         "  gens --type T [--homology]\n"
         "                        list the generator catalog\n"
         "  normalize --type T [--in FILE]\n"
         "                        reduce a member to normal form\n"
         "  decompose [--type T] [--in FILE]\n"
         "                        write a unimodular matrix on the invariant\n"
         "                        sublattice as a generator word\n"
         "  counterexample        print the worked non-member transcript\n"
         "\n"
         "options:\n"
         "  --type g=<genus>,type=<sign><ovals>   topological type\n"
         "  --in FILE                             matrix file, - for stdin\n"
         "  --homology                            include induced matrices\n"
         "  --machine                             KEY value output lines\n";
}

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Options parse_args(int argc, char** argv) {
  Options o;
  if (argc < 2) throw UsageError("missing command");
  o.command = argv[1];
  for (int i = 2; i < argc; ++i) {
    std::string a = argv[i];
    auto value_of = [&](const std::string& flag) {
      if (a.size() > flag.size() && a.compare(0, flag.size() + 1, flag + "=") == 0)
        return a.substr(flag.size() + 1);
      if (++i >= argc) throw UsageError(flag + " needs a value");
      return std::string(argv[i]);
    };
    if (a == "--type" || a.rfind("--type=", 0) == 0) {
      o.type = value_of("--type");
    } else if (a == "--in" || a.rfind("--in=", 0) == 0) {
      o.in = value_of("--in");
    } else if (a == "--homology") {
      o.homology = true;
    } else if (a == "--machine") {
      o.machine = true;
    } else if (!a.empty() && a[0] == '-' && a != "-") {
      throw UsageError("unknown option: " + a);
    } else {
      o.positional.push_back(a);
    }
  }
  return o;
}

TopologicalType required_type(const Options& o) {
  if (o.type.empty()) throw UsageError(o.command + " needs --type");
  return TopologicalType::parse(o.type);
}

int cmd_types(const Options& o) {
  if (o.positional.size() != 1)
    throw UsageError("types needs exactly one genus argument");
  int g = 0;
  try {
    std::size_t used = 0;
    g = std::stoi(o.positional[0], &used);
    if (used != o.positional[0].size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw UsageError("genus must be an integer: " + o.positional[0]);
  }
  if (g < 1) throw UsageError("genus must be at least 1");
  std::vector<TopologicalType> types = enumerate_types(g);
  if (o.machine) {
    for (const TopologicalType& t : types)
      std::cout << "TYPE " << t.type_token() << "\n";
  } else {
    for (std::size_t i = 0; i < types.size(); ++i)
      std::cout << (i ? " " : "") << types[i].type_token();
    std::cout << "\n";
  }
  return 0;
}

int cmd_sigma(const Options& o) {
  TopologicalType t = required_type(o);
  write_matrix(std::cout, sigma_matrix(t));
  return 0;
}

void print_report_text(const MembershipReport& rep) {
  std::cout << rep.to_text();
}

void print_report_machine(const MembershipReport& rep) {
  std::cout << "TYPE " << rep.type.to_string() << "\n";
  for (const ConditionResult& c : rep.conditions) {
    std::cout << "COND" << c.id << " " << (c.passed ? "pass" : "fail") << "\n";
    if (!c.witness.empty())
      std::cout << "WITNESS" << c.id << " " << c.witness << "\n";
  }
  std::cout << "MEMBER " << (rep.member ? "yes" : "no") << "\n";
  if (rep.epsilon != 0)
    std::cout << "EPSILON " << (rep.epsilon > 0 ? "+1" : "-1") << "\n";
  if (!rep.permutation.empty()) {
    std::cout << "PERMUTATION";
    for (int p : rep.permutation) std::cout << " " << p;
    std::cout << "\n";
  }
  if (!rep.signs.empty()) {
    std::cout << "SIGNS";
    for (int s : rep.signs) std::cout << " " << (s > 0 ? "+1" : "-1");
    std::cout << "\n";
  }
}

int cmd_check(const Options& o) {
  TopologicalType t = required_type(o);
  ExactMatrix m = read_matrix_source(o.in);
  MembershipReport rep = check_membership(m, t);
  if (o.machine)
    print_report_machine(rep);
  else
    print_report_text(rep);
  return rep.member ? 0 : 1;
}

int cmd_gens(const Options& o) {
  TopologicalType t = required_type(o);
  DeltaPresentation pres = canonical_presentation(t);
  std::vector<CatalogEntry> catalog = catalog_with_matrices(t);
  for (const CatalogEntry& e : catalog) {
    if (o.machine)
      std::cout << "GEN " << e.name << "\n";
    else
      std::cout << "NAME " << e.name << "\n";
    if (!o.machine) {
      if (e.matrix_only) {
        std::cout << "  (homology-level involution; no substitution table)\n";
      } else {
        for (const GeneratorSymbol& s : pres.generators)
          std::cout << "  " << s.label() << " -> "
                    << e.phi.image_of(s).to_string() << "\n";
      }
    }
    if (o.homology) {
      if (!o.machine) std::cout << "MATRIX\n";
      write_matrix(std::cout, e.matrix);
    }
  }
  return 0;
}

int cmd_normalize(const Options& o) {
  TopologicalType t = required_type(o);
  ExactMatrix m = read_matrix_source(o.in);
  MembershipReport rep = check_membership(m, t);
  if (!rep.member) {
    if (o.machine)
      print_report_machine(rep);
    else
      print_report_text(rep);
    return 1;
  }
  NormalizationResult res = normalize_member(m, t);
  std::cout << "WORD " << res.word.to_string() << "\n";
  std::cout << "RESIDUAL\n";
  write_matrix(std::cout, res.residual);
  return 0;
}

int cmd_decompose(const Options& o) {
  ExactMatrix m = read_matrix_source(o.in);
  if (!m.is_square() || m.rows() == 0)
    throw UsageError("decompose needs a square nonempty matrix");
  if (!o.type.empty()) {
    TopologicalType t = TopologicalType::parse(o.type);
    if (t.separating() || t.ovals != 0)
      throw UsageError(
          "decompose works on the invariant sublattice of the oval-free "
          "type; use type -0");
    if (static_cast<std::size_t>(t.genus) != m.rows())
      throw UsageError("matrix size does not match the genus");
  }
  GeneratorWord word;
  try {
    word = decompose_gl(m);
  } catch (const std::invalid_argument& e) {
    if (std::string(e.what()) == "not unimodular") {
      std::cout << "not unimodular\n";
      return 1;
    }
    throw;
  }
  std::cout << "WORD " << word.to_string() << "\n";
  return 0;
}

int cmd_counterexample() {
  TopologicalType t = counterexample_type();
  ExactMatrix h = counterexample_matrix();
  std::cout << "TYPE " << t.to_string() << "\n";
  std::cout << "BASIS";
  for (int i = 1; i <= t.genus; ++i) std::cout << " X_" << i;
  for (int i = 1; i <= t.genus; ++i) std::cout << " Y_" << i;
  std::cout << "\n";
  std::cout << "SIGMA\n";
  write_matrix(std::cout, sigma_matrix(t));
  std::cout << "H\n";
  write_matrix(std::cout, h);
  std::cout << check_membership(h, t).to_text();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  try {
    o = parse_args(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    usage(std::cerr);
    return 2;
  }
  try {
    if (o.command == "types") return cmd_types(o);
    if (o.command == "sigma") return cmd_sigma(o);
    if (o.command == "check") return cmd_check(o);
    if (o.command == "gens") return cmd_gens(o);
    if (o.command == "normalize") return cmd_normalize(o);
    if (o.command == "decompose") return cmd_decompose(o);
    if (o.command == "counterexample") return cmd_counterexample();
    if (o.command == "help" || o.command == "--help" || o.command == "-h") {
      usage(std::cout);
      return 0;
    }
    std::cerr << "error: unknown command: " << o.command << "\n";
    usage(std::cerr);
    return 2;
  } catch (const NormalizationError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
