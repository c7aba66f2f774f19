#pragma once

#include <cstdint>

namespace lad {

// Width of a field holding values 0..n_values-1, information-theoretically.
inline long bits_for_values(long n_values) {
    if (n_values <= 1) return 0;
    long bits = 0;
    unsigned long long span = 1;
    while (span < static_cast<unsigned long long>(n_values)) {
        span <<= 1;
        ++bits;
    }
    return bits;
}

// Port fields admit 0..max_degree-1 plus one sentinel (none/-1).
inline long port_bits(int max_degree) { return bits_for_values(static_cast<long>(max_degree) + 1); }

// Accumulates declared persistent field widths. Scratch used within one
// Compute step is never added here.
class BitMeter {
  public:
    void add_flag() { total_ += 1; }
    void add_values(long n_values) { total_ += bits_for_values(n_values); }
    void add_port(int max_degree) { total_ += port_bits(max_degree); }
    void add_bits(long bits) { total_ += bits; }
    long total() const { return total_; }

  private:
    long total_ = 0;
};

} // namespace lad
