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
  \file literal.hpp
  \brief AIG literals in AIGER encoding (2 * variable + complement)
*/

#pragma once

#include <cstdint>
#include <functional>

namespace aigwave
{

/*! \brief A possibly complemented reference to an AIG variable.
 *
 * Variable 0 is the constant; literal 0 is false, literal 1 is true.
 * Variables 1..I are primary inputs, the rest are AND nodes.
 */
class literal
{
public:
  constexpr literal() = default;

  static constexpr literal from_raw( uint32_t raw ) { return literal( raw ); }
  static constexpr literal make( uint32_t var, bool negated = false )
  {
    return literal( 2 * var + ( negated ? 1u : 0u ) );
  }
  static constexpr literal constant( bool value ) { return literal( value ? 1u : 0u ); }

  constexpr uint32_t raw() const { return data_; }
  constexpr uint32_t var() const { return data_ >> 1; }
  constexpr bool is_negated() const { return ( data_ & 1u ) != 0; }
  constexpr bool is_constant() const { return var() == 0; }
  constexpr bool is_const_false() const { return data_ == 0; }
  constexpr bool is_const_true() const { return data_ == 1; }

  /*! \brief Complemented copy. */
  constexpr literal operator!() const { return literal( data_ ^ 1u ); }
  /*! \brief Conditionally complemented copy. */
  constexpr literal operator^( bool neg ) const { return literal( data_ ^ ( neg ? 1u : 0u ) ); }

  constexpr bool operator==( const literal& other ) const { return data_ == other.data_; }
  constexpr bool operator!=( const literal& other ) const { return data_ != other.data_; }
  constexpr bool operator<( const literal& other ) const { return data_ < other.data_; }
  constexpr bool operator<=( const literal& other ) const { return data_ <= other.data_; }

private:
  constexpr explicit literal( uint32_t raw ) : data_( raw ) {}
  uint32_t data_{ 0 };
};

} // namespace aigwave

template<>
struct std::hash<aigwave::literal>
{
  size_t operator()( const aigwave::literal& l ) const noexcept
  {
    return std::hash<uint32_t>{}( l.raw() );
  }
};
