#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclepack {

// Resource caps for the search/algebra engines.  Every cap fails loudly with
// guard_error instead of silently truncating results.
struct limits {
    std::uint64_t max_cycles = 1'000'000;            // enumerated simple cycles
    std::uint64_t max_collection_nodes = 1'000'000;  // nodes in the collection search tree
    std::uint64_t max_spairs = 200'000;              // processed S-pairs per Groebner run
    std::uint64_t max_disassemblies = 1'000'000;     // enumerated disassemblies
};

// Input could not be parsed (malformed file, unknown syntax, bad numbers).
class parse_error : public std::runtime_error {
  public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A resource cap was hit; partial results are discarded, never returned.
class guard_error : public std::runtime_error {
  public:
    guard_error(const std::string& which, std::uint64_t cap)
        : std::runtime_error(which + " guard exceeded (cap " + std::to_string(cap) + ")"),
          guard_name(which) {}
    std::string guard_name;
};

// Two independent routes disagreed on a quantity they must agree on.
class internal_error : public std::logic_error {
  public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cyclepack
