/* aigwave: C++ AIG optimization and RL-driven sequence design
 * Copyright (C) 2026  the aigwave authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file rng.hpp
  \brief Seeded random streams

  All randomness flows from one root seed expanded into named streams,
  so adding parallelism or reordering subsystems never perturbs results.
  Generators are hand-rolled (splitmix64 state advance) to keep outputs
  identical across standard libraries.
*/

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace aigwave
{

/*! \brief Deterministic random stream (splitmix64). */
class rng
{
public:
  explicit rng( uint64_t seed ) : state_( seed ) {}

  uint64_t next_u64()
  {
    uint64_t z = ( state_ += 0x9e3779b97f4a7c15ull );
    z = ( z ^ ( z >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
    z = ( z ^ ( z >> 27 ) ) * 0x94d049bb133111ebull;
    return z ^ ( z >> 31 );
  }

  /*! \brief Uniform double in [0, 1). */
  double next_double() { return static_cast<double>( next_u64() >> 11 ) * 0x1.0p-53; }

  /*! \brief Uniform integer in [0, bound). Requires bound > 0. */
  uint64_t next_below( uint64_t bound )
  {
    // rejection sampling keeps the draw exactly uniform
    const uint64_t threshold = ( 0ull - bound ) % bound;
    for ( ;; )
    {
      const uint64_t r = next_u64();
      if ( r >= threshold )
        return r % bound;
    }
  }

  bool next_bool() { return ( next_u64() & 1ull ) != 0; }

  /*! \brief Sample an index from unnormalized non-negative weights. */
  size_t next_categorical( const std::vector<double>& weights )
  {
    double total = 0.0;
    for ( double w : weights )
      total += w;
    double x = next_double() * total;
    for ( size_t i = 0; i + 1 < weights.size(); ++i )
    {
      x -= weights[i];
      if ( x < 0.0 )
        return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
  }

  template<typename T>
  void shuffle( std::vector<T>& v )
  {
    for ( size_t i = v.size(); i > 1; --i )
    {
      const size_t j = static_cast<size_t>( next_below( i ) );
      std::swap( v[i - 1], v[j] );
    }
  }

private:
  uint64_t state_;
};

/*! \brief Derives independent named streams from a root seed. */
class rng_forest
{
public:
  explicit rng_forest( uint64_t root_seed ) : root_( root_seed ) {}

  uint64_t root_seed() const { return root_; }

  /*! \brief Stream for a named subsystem; optional index for per-item streams. */
  rng stream( std::string_view name, uint64_t index = 0 ) const
  {
    uint64_t h = 0xcbf29ce484222325ull; // FNV-1a over the name
    for ( char c : name )
    {
      h ^= static_cast<uint8_t>( c );
      h *= 0x100000001b3ull;
    }
    rng mix( root_ ^ h );
    mix.next_u64();
    rng mix2( mix.next_u64() ^ ( index * 0x9e3779b97f4a7c15ull + 0x1234567ull ) );
    return rng( mix2.next_u64() );
  }

private:
  uint64_t root_;
};

} // namespace aigwave
