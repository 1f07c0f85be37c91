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
  \file simulation.hpp
  \brief Bit-parallel circuit simulation
*/

#pragma once

#include "aig.hpp"
#include "rng.hpp"

#include <cstdint>
#include <vector>

namespace aigwave
{

/*! \brief Bit matrix of assignments, one row of packed words per signal. */
class bit_matrix
{
public:
  bit_matrix( uint32_t num_signals, uint32_t num_patterns )
      : num_signals_( num_signals ),
        num_patterns_( num_patterns ),
        words_per_signal_( ( num_patterns + 63 ) / 64 ),
        bits_( static_cast<size_t>( num_signals ) * words_per_signal_, 0 )
  {
  }

  uint32_t num_signals() const { return num_signals_; }
  uint32_t num_patterns() const { return num_patterns_; }
  uint32_t words_per_signal() const { return words_per_signal_; }

  bool get( uint32_t pattern, uint32_t signal ) const
  {
    return ( word( signal, pattern / 64 ) >> ( pattern % 64 ) ) & 1ull;
  }
  void set( uint32_t pattern, uint32_t signal, bool value )
  {
    uint64_t& w = word( signal, pattern / 64 );
    const uint64_t mask = 1ull << ( pattern % 64 );
    w = value ? ( w | mask ) : ( w & ~mask );
  }

  uint64_t word( uint32_t signal, uint32_t index ) const
  {
    return bits_[static_cast<size_t>( signal ) * words_per_signal_ + index];
  }
  uint64_t& word( uint32_t signal, uint32_t index )
  {
    return bits_[static_cast<size_t>( signal ) * words_per_signal_ + index];
  }

  /*! \brief All 2^n assignments of n inputs, n <= 26. */
  static bit_matrix exhaustive( uint32_t num_inputs );
  /*! \brief n random assignments. */
  static bit_matrix random( uint32_t num_inputs, uint32_t num_patterns, rng& gen );

  bool operator==( const bit_matrix& other ) const
  {
    return num_signals_ == other.num_signals_ && num_patterns_ == other.num_patterns_ &&
           bits_ == other.bits_;
  }

private:
  uint32_t num_signals_;
  uint32_t num_patterns_;
  uint32_t words_per_signal_;
  std::vector<uint64_t> bits_;
};

/*! \brief Evaluate all outputs over the given input patterns.
 *
 * Bit-parallel over 64-pattern blocks; deterministic.  Throws
 * width_mismatch when the pattern width differs from the input count.
 */
bit_matrix simulate( const aig& g, const bit_matrix& patterns );

} // namespace aigwave
