#pragma once

#include "modring.hpp"
#include "group.hpp"
#include "cochain.hpp"
#include "cohomology.hpp"
#include "bicrossed.hpp"
#include "families.hpp"
#include "fiber.hpp"
#include "morita.hpp"
