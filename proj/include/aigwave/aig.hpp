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
  \file aig.hpp
  \brief And-inverter graph with structural hashing

  \verbatim
  Variable numbering follows AIGER: variable 0 is the constant,
  variables 1..I are primary inputs, I+1..I+A are AND nodes in
  topological order.  Graphs are immutable once built; all
  construction goes through aig_builder.
  \endverbatim
*/

#pragma once

#include "literal.hpp"

#include <array>
#include <cassert>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace aigwave
{

struct and_node
{
  literal fanin0; // fanin0.raw() <= fanin1.raw()
  literal fanin1;
};

/*! \brief The 7-element statistics vector plus derived area/delay.
 *
 * Serialization order is [primary_io, nodes, edges, levels, latches,
 * pct_ands, pct_nots].  Area is the AND-node count, delay the maximum
 * output level.  Latches are always 0 (combinational only).
 */
struct circuit_stats
{
  uint32_t primary_io{ 0 };
  uint32_t nodes{ 0 };
  uint32_t edges{ 0 };
  uint32_t levels{ 0 };
  uint32_t latches{ 0 };
  double pct_ands{ 0.0 };
  double pct_nots{ 0.0 };

  uint32_t area() const { return nodes; }
  uint32_t delay() const { return levels; }

  std::array<double, 7> as_vector() const
  {
    return { static_cast<double>( primary_io ), static_cast<double>( nodes ),
             static_cast<double>( edges ),      static_cast<double>( levels ),
             static_cast<double>( latches ),    pct_ands,
             pct_nots };
  }
};

/*! \brief Immutable combinational and-inverter graph. */
class aig
{
public:
  aig() = default;

  uint32_t num_inputs() const { return num_inputs_; }
  uint32_t num_ands() const { return static_cast<uint32_t>( nodes_.size() ); }
  uint32_t num_outputs() const { return static_cast<uint32_t>( outputs_.size() ); }
  /*! \brief Total variable count including the constant. */
  uint32_t num_vars() const { return 1 + num_inputs_ + num_ands(); }
  uint32_t first_and_var() const { return 1 + num_inputs_; }

  bool is_constant( uint32_t var ) const { return var == 0; }
  bool is_input( uint32_t var ) const { return var >= 1 && var <= num_inputs_; }
  bool is_and( uint32_t var ) const { return var >= first_and_var() && var < num_vars(); }

  literal input( uint32_t index ) const
  {
    assert( index < num_inputs_ );
    return literal::make( 1 + index );
  }

  const and_node& node( uint32_t var ) const
  {
    assert( is_and( var ) );
    return nodes_[var - first_and_var()];
  }

  uint32_t level( uint32_t var ) const
  {
    assert( var < num_vars() );
    return levels_[var];
  }

  const std::vector<literal>& outputs() const { return outputs_; }
  literal output( uint32_t index ) const { return outputs_[index]; }

  /*! \brief Maximum level over all outputs (the delay). */
  uint32_t depth() const;

  circuit_stats stats() const;

  /*! \brief Existing node computing the canonical pair, if any. */
  const std::unordered_map<uint64_t, uint32_t>& strash_table() const { return strash_; }

  /*! \brief Asserts topological order, strash uniqueness, level
   * correctness, canonical fanin order and absence of constant fanins.
   * Throws std::logic_error on violation. */
  void check_invariants() const;

  /*! \brief Structural equality (same shape, not just same function). */
  bool structurally_equal( const aig& other ) const;

private:
  friend class aig_builder;

  uint32_t num_inputs_{ 0 };
  std::vector<and_node> nodes_;
  std::vector<literal> outputs_;
  std::vector<uint32_t> levels_; // indexed by variable; constant and inputs are 0
  std::unordered_map<uint64_t, uint32_t> strash_;
};

/*! \brief Single-use builder enforcing structural hashing and constant
 * propagation.
 *
 * add_and applies and(x, 1) = x, and(x, 0) = 0, and(x, x) = x,
 * and(x, !x) = 0 and returns the existing literal when the canonical
 * fanin pair is already hashed.
 */
class aig_builder
{
public:
  explicit aig_builder( uint32_t num_inputs );

  uint32_t num_inputs() const { return num_inputs_; }
  uint32_t num_ands() const { return static_cast<uint32_t>( nodes_.size() ); }

  literal constant( bool value ) const { return literal::constant( value ); }
  literal input( uint32_t index ) const
  {
    assert( index < num_inputs_ );
    return literal::make( 1 + index );
  }

  literal add_and( literal a, literal b );
  literal add_or( literal a, literal b ) { return !add_and( !a, !b ); }
  literal add_nand( literal a, literal b ) { return !add_and( a, b ); }
  literal add_nor( literal a, literal b ) { return add_and( !a, !b ); }
  literal add_xor( literal a, literal b )
  {
    return add_or( add_and( a, !b ), add_and( !a, b ) );
  }
  literal add_xnor( literal a, literal b ) { return !add_xor( a, b ); }
  /*! \brief sel ? then_ : else_ */
  literal add_mux( literal sel, literal then_, literal else_ )
  {
    return add_or( add_and( sel, then_ ), add_and( !sel, else_ ) );
  }
  literal add_maj( literal a, literal b, literal c )
  {
    return add_or( add_and( a, b ), add_and( c, add_or( a, b ) ) );
  }

  void add_output( literal f ) { outputs_.push_back( f ); }

  uint32_t level_of( literal l ) const { return levels_[l.var()]; }

  /*! \brief Finalize: sweep nodes unreachable from outputs, renumber
   * densely, and return the immutable graph. */
  aig build() const;

private:
  uint32_t num_inputs_;
  std::vector<and_node> nodes_;
  std::vector<literal> outputs_;
  std::vector<uint32_t> levels_;
  std::unordered_map<uint64_t, uint32_t> strash_;
};

/*! \brief Strash key for a canonically ordered fanin pair. */
inline uint64_t fanin_pair_key( literal f0, literal f1 )
{
  return ( static_cast<uint64_t>( f0.raw() ) << 32 ) | f1.raw();
}

} // namespace aigwave
