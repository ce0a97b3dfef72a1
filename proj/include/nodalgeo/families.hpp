#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nodalgeo/graph.hpp"

namespace nodalgeo {

Graph star(int leaves);                    // K_{1,N}, center is vertex 0
Graph double_star(int leaves);             // K_{2,N}, centers are vertices 0 and 1
Graph complete_bipartite(int a, int b);    // parts {0..a-1}, {a..a+b-1}
Graph cycle(int n);
Graph path(int n);
Graph grid(int rows, int cols);
Graph random_connected(int n, double p, std::uint64_t seed);

}  // namespace nodalgeo
