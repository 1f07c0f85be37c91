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

#include "aigwave/aig.hpp"

#include <algorithm>
#include <stdexcept>

namespace aigwave
{

uint32_t aig::depth() const
{
  uint32_t d = 0;
  for ( const auto& o : outputs_ )
    d = std::max( d, levels_[o.var()] );
  return d;
}

circuit_stats aig::stats() const
{
  circuit_stats s;
  s.primary_io = num_inputs_ + num_outputs();
  s.nodes = num_ands();
  s.edges = 2 * s.nodes;
  s.levels = depth();
  s.latches = 0;
  const uint32_t total_vars = num_inputs_ + s.nodes;
  s.pct_ands = total_vars == 0 ? 0.0 : static_cast<double>( s.nodes ) / total_vars;
  uint32_t complemented = 0;
  for ( const auto& n : nodes_ )
    complemented += ( n.fanin0.is_negated() ? 1 : 0 ) + ( n.fanin1.is_negated() ? 1 : 0 );
  s.pct_nots = s.edges == 0 ? 0.0 : static_cast<double>( complemented ) / s.edges;
  return s;
}

void aig::check_invariants() const
{
  auto fail = [&]( const std::string& msg, uint32_t var ) {
    throw std::logic_error( "aig invariant violated at var " + std::to_string( var ) + ": " + msg );
  };
  if ( levels_.size() != num_vars() )
    fail( "level table size", num_vars() );
  for ( uint32_t v = 0; v < first_and_var(); ++v )
  {
    if ( levels_[v] != 0 )
      fail( "input/constant level must be 0", v );
  }
  for ( uint32_t v = first_and_var(); v < num_vars(); ++v )
  {
    const and_node& n = node( v );
    if ( n.fanin0.var() >= v || n.fanin1.var() >= v )
      fail( "fanin does not precede node", v );
    if ( n.fanin0.raw() > n.fanin1.raw() )
      fail( "fanin pair not canonically ordered", v );
    if ( n.fanin0.is_constant() || n.fanin1.is_constant() )
      fail( "constant fanin not propagated", v );
    if ( n.fanin0 == n.fanin1 || n.fanin0 == !n.fanin1 )
      fail( "trivial fanin pair survived", v );
    const uint32_t want = 1 + std::max( levels_[n.fanin0.var()], levels_[n.fanin1.var()] );
    if ( levels_[v] != want )
      fail( "level mismatch", v );
    const auto it = strash_.find( fanin_pair_key( n.fanin0, n.fanin1 ) );
    if ( it == strash_.end() || it->second != v )
      fail( "strash table does not map pair to node", v );
  }
  if ( strash_.size() != nodes_.size() )
    throw std::logic_error( "aig invariant violated: duplicate fanin pair in strash table" );
  for ( const auto& o : outputs_ )
  {
    if ( o.var() >= num_vars() )
      fail( "output references missing variable", o.var() );
  }
}

bool aig::structurally_equal( const aig& other ) const
{
  return num_inputs_ == other.num_inputs_ && outputs_ == other.outputs_ &&
         nodes_.size() == other.nodes_.size() &&
         std::equal( nodes_.begin(), nodes_.end(), other.nodes_.begin(),
                     []( const and_node& a, const and_node& b ) {
                       return a.fanin0 == b.fanin0 && a.fanin1 == b.fanin1;
                     } );
}

aig_builder::aig_builder( uint32_t num_inputs ) : num_inputs_( num_inputs )
{
  levels_.assign( 1 + num_inputs, 0 );
}

literal aig_builder::add_and( literal a, literal b )
{
  assert( a.var() <= num_inputs_ + nodes_.size() );
  assert( b.var() <= num_inputs_ + nodes_.size() );

  if ( a.raw() > b.raw() )
    std::swap( a, b );
  // constant and trivial cases
  if ( a.is_const_false() )
    return literal::constant( false );
  if ( a.is_const_true() )
    return b;
  if ( a == b )
    return a;
  if ( a == !b )
    return literal::constant( false );

  const uint64_t key = fanin_pair_key( a, b );
  if ( auto it = strash_.find( key ); it != strash_.end() )
    return literal::make( it->second );

  const uint32_t var = 1 + num_inputs_ + static_cast<uint32_t>( nodes_.size() );
  nodes_.push_back( { a, b } );
  levels_.push_back( 1 + std::max( levels_[a.var()], levels_[b.var()] ) );
  strash_.emplace( key, var );
  return literal::make( var );
}

aig aig_builder::build() const
{
  // mark reachable variables
  std::vector<char> reachable( 1 + num_inputs_ + nodes_.size(), 0 );
  std::vector<uint32_t> stack;
  for ( const auto& o : outputs_ )
  {
    if ( !reachable[o.var()] )
    {
      reachable[o.var()] = 1;
      stack.push_back( o.var() );
    }
  }
  const uint32_t first_and = 1 + num_inputs_;
  while ( !stack.empty() )
  {
    const uint32_t v = stack.back();
    stack.pop_back();
    if ( v < first_and )
      continue;
    const and_node& n = nodes_[v - first_and];
    for ( const literal f : { n.fanin0, n.fanin1 } )
    {
      if ( !reachable[f.var()] )
      {
        reachable[f.var()] = 1;
        stack.push_back( f.var() );
      }
    }
  }

  // renumber densely; original order is topological, a subsequence stays so
  std::vector<uint32_t> remap( reachable.size(), 0 );
  for ( uint32_t v = 0; v <= num_inputs_; ++v )
    remap[v] = v;

  aig result;
  result.num_inputs_ = num_inputs_;
  result.levels_.assign( 1 + num_inputs_, 0 );
  uint32_t next = first_and;
  for ( uint32_t v = first_and; v < reachable.size(); ++v )
  {
    if ( !reachable[v] )
      continue;
    const and_node& n = nodes_[v - first_and];
    and_node m{ literal::make( remap[n.fanin0.var()], n.fanin0.is_negated() ),
                literal::make( remap[n.fanin1.var()], n.fanin1.is_negated() ) };
    if ( m.fanin0.raw() > m.fanin1.raw() )
      std::swap( m.fanin0, m.fanin1 );
    remap[v] = next;
    result.nodes_.push_back( m );
    result.levels_.push_back(
        1 + std::max( result.levels_[m.fanin0.var()], result.levels_[m.fanin1.var()] ) );
    result.strash_.emplace( fanin_pair_key( m.fanin0, m.fanin1 ), next );
    ++next;
  }
  result.outputs_.reserve( outputs_.size() );
  for ( const auto& o : outputs_ )
    result.outputs_.push_back( literal::make( remap[o.var()], o.is_negated() ) );
  return result;
}

} // namespace aigwave
