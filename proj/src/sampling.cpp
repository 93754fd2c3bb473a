#include "hob/sampling.hpp"

#include <cmath>
#include <vector>

#include "hob/error.hpp"

namespace hob {

SamplePoint random_tile_point(const Atlas& atlas, int max_rank, std::mt19937_64& rng) {
  std::vector<int> pool;
  for (const Tile& t : atlas.tiles()) {
    if (t.rank >= 1 && t.rank <= max_rank) pool.push_back(t.id);
  }
  if (pool.empty()) throw Error(Errc::InvalidArgument, "no tiles of rank 1..max_rank in the atlas");

  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Tile& tile = atlas.tile(pool[pick(rng)]);

  // Dirichlet(1, ..., 1) weights
  std::vector<double> w(tile.vertices.size());
  double total = 0.0;
  for (double& x : w) {
    x = -std::log(1.0 - unit(rng));
    total += x;
  }
  double u = 0.0;
  double v = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const ChartPoint c = chart(tile.vertices[i]);
    u += w[i] / total * c.u;
    v += w[i] / total * c.v;
  }
  return {tile.id, HPoint::from_chart(u, v)};
}

}  // namespace hob
