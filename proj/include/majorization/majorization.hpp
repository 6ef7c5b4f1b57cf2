#ifndef MAJORIZATION_MAJORIZATION_HPP_INCLUDED
#define MAJORIZATION_MAJORIZATION_HPP_INCLUDED

#include "majorization/doubly_stochastic.hpp"
#include "majorization/errors.hpp"
#include "majorization/isotone.hpp"
#include "majorization/numerics.hpp"
#include "majorization/order.hpp"
#include "majorization/random.hpp"
#include "majorization/rearrangement.hpp"

#endif
