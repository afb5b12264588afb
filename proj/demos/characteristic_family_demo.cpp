// Streams pointwise records for a small family of rotated generic 3-forms:
// the deviation of the assembled characteristic torsion from the connection
// torsion, and the three class residuals.

#include <cstdio>

#include "torsionlab/serialize.hpp"

using namespace torsionlab;

int main() {
  const auto rep = s7::build_clifford7();
  Rng rng(2718);

  std::vector<G2PointRecord> records;
  for (int family = 0; family < 3; ++family) {
    const AltForm omega =
        family == 0 ? g2::standard_form()
                    : transform_form(g2::standard_form(), random_special_orthogonal(7, rng));
    for (int s = 0; s < 4; ++s) {
      const std::uint64_t point_seed = 1000 * (family + 1) + s;
      Rng point_rng(point_seed);
      const auto x = s7::sample_point(point_rng);
      const AltForm t = s7::torsion_at(rep, x);
      G2PointRecord rec;
      rec.point_seed = point_seed;
      rec.tc_deviation = max_abs_diff(g2::characteristic_torsion(omega, t), t);
      rec.residuals =
          g2::fg_type_residuals(omega, g2::frame_d(omega, t), g2::codifferential(omega, t));
      records.push_back(rec);
    }
  }
  std::fputs(to_json_lines(records).c_str(), stdout);
  return 0;
}
