#include "grpx/complexes.hpp"
#include "grpx/graphs.hpp"

namespace grpx {

namespace {

Graph skeleton_complement(const SimplicialComplex& c) {
  Graph s(c.vertex_count());
  for (std::size_t i = 0; i < c.face_count(2); ++i) {
    auto f = c.face(2, i);
    s.add_edge(f[0], f[1]);
  }
  return s.complement();
}

}  // namespace

SkeletonCheck skeleton_complement_check(const SubgroupLattice& l) {
  ComplexOptions opt;
  opt.max_cardinality = 2;
  SkeletonCheck r;
  r.power = skeleton_complement(independence_complex(l, opt)) == power_graph(l.group());
  r.enhanced = skeleton_complement(strong_independence_complex(l, opt)) == enhanced_power_graph(l.group());
  return r;
}

}  // namespace grpx
