#pragma once

#include <functional>
#include <string>

namespace partmeth {

// DS: D_k with p[i,n], q[N] and a. ES: E_k in terms of DS[i,n].
// Pfn: p(k) as powers of (-1) over the pentagonal-element partitions.
// DispFnPoly: q(k,-w) and p(k,w) over the divisor polynomials DP[i,w].
enum class EmitKind { DS, ES, Pfn, DispFnPoly };

const char* emit_kind_name(EmitKind k);
// Accepts "DS", "ES", "pfn", "dispfnpoly" (case-insensitive).
EmitKind parse_emit_kind(const std::string& s);

struct EmitOptions {
    // Three terms per line with a trailing "+" on every full line.
    bool wrap_three = false;
};

// Receives the text in order. term_end marks the end of each complete term,
// so a caller can roll files between terms.
using EmitSink = std::function<void(const std::string& chunk, bool term_end)>;

// Streams the expression; returns the number of terms. Throws std::invalid_argument for k < 1.
uint64_t emit_symbolic(EmitKind what, int k, const EmitSink& sink, EmitOptions opt = {});
std::string emit_symbolic(EmitKind what, int k, EmitOptions opt = {});

}  // namespace partmeth
