#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <json.hpp>

namespace homlab {

/// Vertices are arbitrary-size naturals. Structured oracles (Rado in
/// particular) have interesting witnesses far beyond 2^64: the least
/// 6-clique of the BIT graph tops out around 2^2059.
using Vertex = mpz_class;

inline Vertex vtx(std::uint64_t v) {
    Vertex out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return out;
}

inline bool fits_u64(const Vertex& v) {
    return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Vertex& v) {
    if (!fits_u64(v))
        throw std::overflow_error("vertex does not fit in 64 bits: " + v.get_str());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

/// JSON encoding: plain number while it fits an unsigned 64-bit value,
/// decimal string beyond that.
inline nlohmann::ordered_json vertex_to_json(const Vertex& v) {
    if (fits_u64(v)) return to_u64(v);
    return v.get_str();
}

inline Vertex vertex_from_json(const nlohmann::json& j) {
    if (j.is_number_unsigned()) return vtx(j.get<std::uint64_t>());
    if (j.is_number_integer()) {
        auto s = j.get<std::int64_t>();
        if (s < 0) throw std::invalid_argument("vertex must be nonnegative");
        return vtx(static_cast<std::uint64_t>(s));
    }
    if (j.is_string()) {
        Vertex v;
        if (v.set_str(j.get<std::string>(), 10) != 0 || v < 0)
            throw std::invalid_argument("bad vertex literal: " + j.dump());
        return v;
    }
    throw std::invalid_argument("vertex must be a number or decimal string");
}

/// Positions of set bits, lowest first. Positions always fit u64 for any
/// representable value.
inline std::vector<std::uint64_t> bit_positions(const Vertex& v) {
    std::vector<std::uint64_t> out;
    mp_bitcnt_t p = mpz_scan1(v.get_mpz_t(), 0);
    while (p != static_cast<mp_bitcnt_t>(-1)) {
        out.push_back(p);
        p = mpz_scan1(v.get_mpz_t(), p + 1);
    }
    return out;
}

}  // namespace homlab
