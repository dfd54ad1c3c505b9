// Build a line-with-loops graph, print its edge list, and show which
// vertices break the in-degree = out-degree condition (only the two ends
// of the finite line do).
#include <cstdio>

#include "dqwalk/dqwalk.hpp"

int main()
{
    using namespace dqwalk;

    const DirectedGraph graph = build_line_with_loops({3, 4, 1});
    std::printf("%s", write_edge_list(graph).c_str());

    const RealizabilityReport report = check_unitary_realizable(graph);
    std::printf("\n%s\n", report.realizable ? "realizable" : "not realizable");
    for (const DegreeImbalance& v : report.violations)
        std::printf("  vertex %zu: in %zu, out %zu\n", v.vertex, v.in_degree,
                    v.out_degree);
    return 0;
}
