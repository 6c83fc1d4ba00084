#ifndef SRGB_SRGB_HPP
#define SRGB_SRGB_HPP

#include "borsuk.hpp"
#include "clique.hpp"
#include "euclid_rep.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "partition.hpp"
#include "projective.hpp"
#include "srg2401.hpp"
#include "srg_math.hpp"

#endif // SRGB_SRGB_HPP
