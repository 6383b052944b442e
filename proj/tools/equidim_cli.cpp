// equidim: equidimensional decomposition of polynomial systems over GF(p).
//
//   equidim run system.txt [--backend witness] [--verify fast] ...
//   equidim gen-ps --n 6 --seed 1 > ps6.txt
//   equidim gen-sos --s 4 --n 2 --seed 1 > sos42.txt

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <json.hpp>

#include "equidim/decomp.hpp"
#include "equidim/system_io.hpp"
#include "equidim/verify.hpp"

using namespace equidim;
using json = nlohmann::ordered_json;

namespace {

constexpr std::uint32_t kMinSlicePrime = 1000;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json strings(const std::vector<Polynomial>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(to_string(p));
  return arr;
}

int run_command(const std::string& path, std::uint32_t prime, const DecompConfig& config,
                const std::string& verify) {
  SystemFile sys = parse_system(read_input(path), prime);
  DecompositionOutput out = equidim::equidim(sys.ring, sys.polynomials, config);

  json doc;
  doc["input"] = {{"variables", sys.variables},
                  {"characteristic", sys.characteristic},
                  {"polynomials", strings(sys.polynomials)}};
  doc["config"] = {{"backend", to_string(config.backend)},
                   {"order", to_string(config.order)},
                   {"seed", config.seed},
                   {"remove", config.classic_remove ? "classic" : "eager"},
                   {"input_order_used", out.input_order_used}};
  json cells = json::array();
  std::vector<AffineCell> plain;
  for (const auto& c : out.cells) {
    cells.push_back({{"equations", strings(cell_basis(c.cell).generators())},
                     {"inequations", strings(c.cell.G)},
                     {"dimension", c.dimension},
                     {"degree", c.degree}});
    plain.push_back(c.cell);
  }
  doc["cells"] = cells;
  doc["cell_count"] = out.cells.size();
  std::map<int, std::uint64_t> by_dim;
  for (const auto& c : out.cells) by_dim[c.dimension] += c.degree;
  json summary = json::object();
  for (auto it = by_dim.rbegin(); it != by_dim.rend(); ++it) summary[std::to_string(it->first)] = it->second;
  doc["degree_by_dimension"] = summary;

  bool ok = true;
  if (verify != "none") {
    PartitionReport rep = check_partition(plain, sys.ring, sys.polynomials, verify == "full");
    json v = to_json(rep);
    ok = rep.passed();
    if (verify == "full") {
      Rng rng(config.seed ^ 0x9e3779b97f4a7c15ull);
      json tops = json::array();
      // random slices are too often degenerate over tiny fields
      const bool sliced = sys.ring->field.prime() > kMinSlicePrime;
      for (const auto& c : out.cells) {
        json t;
        if (sliced) {
          TopDimensionReport r = check_top_dimension(c.cell, c.dimension, rng);
          t = to_json(r);
          t["method"] = "slices";
        } else {
          int krull = dimension(cell_basis(c.cell));
          t = {{"claimed", c.dimension}, {"passed", krull == c.dimension}, {"method", "krull"}, {"krull", krull}};
        }
        ok = ok && t["passed"].get<bool>();
        tops.push_back(t);
      }
      v["top_dimension"] = tops;
    }
    v["passed"] = ok;
    doc["verification"] = v;
  }
  std::cout << doc.dump(2) << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equidimensional decomposition of polynomial systems over GF(p)"};
  app.require_subcommand(1);

  std::string path;
  std::uint32_t prime = 0;
  std::string backend = "witness", order = "degree", verify = "none";
  std::uint64_t seed = 1;
  bool classic = false;
  auto* run = app.add_subcommand("run", "decompose the system in FILE ('-' for stdin)");
  run->add_option("file", path, "system file")->required();
  run->add_option("--char", prime, "field characteristic (overrides the file)");
  run->add_option("--backend", backend, "cell representation")->check(CLI::IsMember({"gb", "witness"}));
  run->add_option("--order", order, "input ordering")->check(CLI::IsMember({"degree", "support", "asis"}));
  run->add_option("--seed", seed, "random seed");
  run->add_option("--verify", verify, "verification level")->check(CLI::IsMember({"none", "fast", "full"}));
  run->add_flag("--classic-remove", classic, "use the original remove recursion");

  int n = 6, s = 4;
  std::uint64_t gen_seed = 1;
  std::uint32_t gen_prime = Field::kDefaultPrime;
  auto* ps = app.add_subcommand("gen-ps", "print a random Ps(n) system");
  ps->add_option("--n", n, "size parameter (>= 3)");
  ps->add_option("--seed", gen_seed, "random seed");
  ps->add_option("--char", gen_prime, "field characteristic");
  auto* sos = app.add_subcommand("gen-sos", "print a random sos(s, n) system");
  sos->add_option("--s", s, "number of squares (>= 1)");
  sos->add_option("--n", n, "number of variables (>= 2)");
  sos->add_option("--seed", gen_seed, "random seed");
  sos->add_option("--char", gen_prime, "field characteristic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run) {
      DecompConfig config;
      config.backend = backend == "gb" ? Backend::gb : Backend::witness;
      config.order = order == "support" ? InputOrder::by_support
                     : order == "asis"  ? InputOrder::as_is
                                        : InputOrder::by_degree;
      config.seed = seed;
      config.classic_remove = classic;
      return run_command(path, prime, config, verify);
    }
    if (gen_prime < 3 || gen_prime >= (1u << 31) || !is_prime(gen_prime))
      throw InputError("characteristic must be an odd prime below 2^31");
    Rng rng(gen_seed);
    if (*ps) {
      if (n < 3) throw InputError("gen-ps needs --n >= 3");
      std::cout << format_system(gen_ps(n, rng, gen_prime));
    } else {
      if (s < 1 || n < 2) throw InputError("gen-sos needs --s >= 1 and --n >= 2");
      std::cout << format_system(gen_sos(s, n, rng, gen_prime));
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
