#pragma once

#include "monty/arith.hpp"
#include "monty/laurent.hpp"
#include "monty/notation.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace monty {

// One crossing of a PD code. `edges` lists the four edge labels
// counterclockwise, starting at the incoming under-edge, so the under
// strand runs edges[0] -> edges[2]. The over strand runs edges[3] ->
// edges[1] when sign = +1 (right-handed) and edges[1] -> edges[3] when
// sign = -1.
struct PdCrossing {
    std::array<long, 4> edges;
    int sign;

    friend bool operator==(const PdCrossing&, const PdCrossing&) = default;
};

// Edge labels run 1..2n for n crossings; each occurs exactly twice.
// Components without crossings are kept as a count of free loops.
struct PlanarDiagram {
    std::vector<PdCrossing> crossings;
    std::size_t free_loops = 0;
    std::optional<LinkExpr> provenance;

    std::size_t edge_count() const { return 2 * crossings.size(); }
    long writhe() const;
};

// Standard diagram: each slope becomes a rational tangle built from the
// regular continued fraction of its value (alternating horizontal and
// vertical twist regions), tangles are summed left to right, e horizontal
// half-twists are appended, and the numerator closure is taken. Pretzel
// parameters become vertical twist columns; B(a/b) is the numerator
// closure of the tangle a/b.
PlanarDiagram synthesize(const LinkExpr& expr);

// Throws DomainError when labels are malformed.
void validate(const PlanarDiagram& d);

std::size_t components(const PlanarDiagram& d);

// True when the crossings form one connected 4-valent graph (and there
// are no free loops beside it).
bool is_connected(const PlanarDiagram& d);

// Goeritz matrix with the shaded face at corner 0 of the first crossing
// deleted. Requires a connected diagram with at least one crossing.
std::vector<std::vector<Integer>> goeritz_matrix(const PlanarDiagram& d);

// |det| of the Goeritz matrix; 0 for split diagrams, 1 for a crossingless
// unknot.
Integer goeritz_det(const PlanarDiagram& d);

// Alexander polynomial from the Wirtinger presentation: Fox-derivative
// matrix, last row and column deleted, divided by content and normalized
// symmetric. Knots only.
LaurentPoly alexander(const PlanarDiagram& d);

// One crossing per line, "a b c d sign"; a final "loops k" line when
// there are free loops.
std::string export_diagram(const PlanarDiagram& d);
PlanarDiagram import_diagram(std::string_view text);

}  // namespace monty
