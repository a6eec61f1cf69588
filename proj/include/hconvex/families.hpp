#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hconvex/graph.hpp"
#include "hconvex/supports.hpp"

namespace hconvex {

/// Seeded std::mt19937_64 with bounded draws by rejection sampling, so
/// streams agree across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  int uniform(int lo, int hi);  // inclusive
  bool coin();
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

struct Generated {
  BipartiteGraph graph;
  std::optional<SupportWitness> witness;
};

/// G_1 is one A-vertex; G_k is three copies of G_{k-1} plus a B-vertex
/// complete to their A-vertices. Throws std::invalid_argument outside 1..5.
BipartiteGraph gen_gk(int k);

/// K_{n,n} minus the matching a_i b_i, with the cycle a1..an as witness.
Generated gen_crown(int n);

struct GridInstance {
  BipartiteGraph graph;  // A = cells with even row+col, B = odd, both row-major
  std::vector<std::pair<int, int>> a_cells;
  std::vector<std::pair<int, int>> b_cells;
};
GridInstance gen_grid(int rows, int cols);

/// One new A-vertex (index |A|) complete to B.
BipartiteGraph augment_star(const BipartiteGraph& g);
/// |A| new A-vertices (indices |A|..2|A|-1) complete to B.
BipartiteGraph augment_comb(const BipartiteGraph& g);
/// Star centred at the vertex added by augment_star.
SupportWitness star_augment_witness(int original_a_size);
/// Comb whose backbone is the path of added vertices and whose tooth at added
/// vertex |A| + i is the original a_i.
SupportWitness comb_augment_witness(int original_a_size);

enum class HostKind { path, cycle, tree };

/// Random host of the requested kind on |A| = a_size (randomly relabelled),
/// and b_size neighbourhoods, each grown from a random vertex by adding a
/// random boundary vertex until a fair coin says stop. Tree hosts have exactly
/// t branching vertices of degree <= delta (the first one gets degree delta
/// when |A| leaves room). Throws std::invalid_argument on impossible sizes.
Generated gen_random_hconvex(HostKind kind, int a_size, int b_size, std::uint64_t seed, int t = 0, int delta = 3);

/// Random chordal bipartite graph: a convex core with interval
/// neighbourhoods, relabelled, plus pendant vertices hanging off both sides.
BipartiteGraph gen_random_chordal_bipartite(int a_size, int b_size, int pendants, std::uint64_t seed);

/// `family:key=val,...[:seed=s]`; a bare token in the parameter list is read
/// as `kind=<token>`. Throws std::invalid_argument on malformed specs.
struct GenSpec {
  std::string family;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
};
GenSpec parse_gen_spec(std::string_view text);
std::string to_string(const GenSpec& spec);

/// Families: gk, crown, grid, star_augment, comb_augment, random_hconvex
/// (hyphenated spellings accepted). The augmentations act on `input` when
/// given, otherwise on the r x c grid from the parameters.
Generated generate(const GenSpec& spec, const BipartiteGraph* input = nullptr);

}  // namespace hconvex
