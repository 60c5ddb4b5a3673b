#pragma once

#include <stdexcept>
#include <string>

namespace hcong {

/// Base of every arithmetic-domain failure raised by the library.
class ArithmeticError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// A rational with p | denominator cannot be reduced into Z/p^eZ.
class PDividesDenominator : public ArithmeticError {
public:
	using ArithmeticError::ArithmeticError;
};

class NotInvertible : public ArithmeticError {
public:
	using ArithmeticError::ArithmeticError;
};

/// A PrimeContext was asked for a harmonic order it was not built with.
class MissingOrder : public std::logic_error {
public:
	explicit MissingOrder(int order)
	    : std::logic_error("harmonic table of order " + std::to_string(order) + " not built"),
	      order_(order)
	{
	}
	int order() const noexcept { return order_; }

private:
	int order_;
};

class OracleBoundExceeded : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

} // namespace hcong
