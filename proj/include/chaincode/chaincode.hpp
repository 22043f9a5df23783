#pragma once

#include "chaincode/errors.hpp"
#include "chaincode/field.hpp"
#include "chaincode/poly.hpp"
#include "chaincode/ring.hpp"
#include "chaincode/linalg.hpp"
#include "chaincode/factorization.hpp"
#include "chaincode/code.hpp"
#include "chaincode/reversibility.hpp"
#include "chaincode/duality.hpp"
#include "chaincode/distance.hpp"
#include "chaincode/io.hpp"
#include "chaincode/tables.hpp"
