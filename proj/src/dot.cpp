#include "latram/dot.hpp"

#include <sstream>

#include "latram/json_io.hpp"

namespace latram {

namespace {

std::string hasse_dot(int n, const std::vector<std::string>& labels,
                      const std::vector<std::pair<int, int>>& covers) {
  std::ostringstream out;
  out << "digraph hasse {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < n; ++v)
    out << "  " << v << " [label=\"" << labels[v] << "\"];\n";
  for (const auto& [a, b] : covers) out << "  " << a << " -> " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string poset_to_dot(const Poset& p) {
  std::vector<std::string> labels;
  for (int v = 0; v < p.size(); ++v) labels.push_back(std::to_string(v));
  return hasse_dot(p.size(), labels, p.cover_pairs());
}

std::string lattice_to_dot(const DistLattice& l) {
  std::vector<std::string> labels;
  for (int x = 0; x < l.size(); ++x)
    labels.push_back(mask_to_bits(l.elem_mask(x), l.base().size()));
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b) {
      if (!l.less(a, b)) continue;
      bool covered = true;
      for (int z = 0; z < l.size() && covered; ++z)
        if (l.less(a, z) && l.less(z, b)) covered = false;
      if (covered) covers.emplace_back(a, b);
    }
  return hasse_dot(l.size(), labels, covers);
}

}  // namespace latram
