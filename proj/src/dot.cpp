#include "magiclab/dot.hpp"

#include <sstream>

namespace magiclab {

std::string to_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph {\n";
  for (int v = 1; v <= d.order(); ++v) out << "  " << v << ";\n";
  for (const Arc& a : d.arcs()) out << "  " << a.from << " -> " << a.to << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const TotalLabeling& f) {
  std::ostringstream out;
  out << "digraph {\n";
  for (int v = 1; v <= f.graph.order(); ++v)
    out << "  " << v << " [label=\"" << v << ":" << f.vertex_label(v) << "\"];\n";
  for (int i = 0; i < f.graph.size(); ++i)
    out << "  " << f.graph.arc(i).from << " -> " << f.graph.arc(i).to
        << " [label=\"" << f.arc_labels[i] << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace magiclab
