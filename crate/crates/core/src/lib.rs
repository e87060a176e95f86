//! Generalized Laguerre polynomials `L_n^⟨r⟩`: construction, p-adic Newton
//! polygons, irreducibility certificates and Galois lower bounds.

pub mod arith;
pub mod criteria;
pub mod galois;
pub mod newton;
pub mod poly;
