//! Python bindings for the main exact and numeric operations. Rationals
//! cross the boundary as "num/den" strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use dzeta::rat::rat_to_string;
use dzeta::{PairIndex, Sign};

fn err(e: dzeta::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyfunction]
fn dmatrix(n: i64) -> PyResult<Vec<Vec<String>>> {
    let m = dzeta::dmatrix(n).map_err(err)?;
    Ok((0..m.rows())
        .map(|i| m.row(i).iter().map(rat_to_string).collect())
        .collect())
}

#[pyfunction]
fn rank_law(n: i64) -> PyResult<(usize, usize)> {
    dzeta::rank_law(n).map_err(err)
}

#[pyfunction]
fn generator_pairs(n: i64) -> PyResult<Vec<(i64, i64)>> {
    let idx: Vec<PairIndex> = dzeta::depth::pairs(n).map_err(err)?;
    Ok(idx.into_iter().map(|p| (p.m, p.n)).collect())
}

#[pyfunction]
fn relations(n: i64) -> PyResult<Vec<Vec<String>>> {
    Ok(dzeta::relations(n)
        .map_err(err)?
        .iter()
        .map(|r| {
            dzeta::rels::normalized_relation(r)
                .iter()
                .map(rat_to_string)
                .collect()
        })
        .collect())
}

#[pyfunction]
fn dim_cusp_forms(k: i64) -> usize {
    dzeta::dim_cusp_forms(k)
}

#[pyfunction]
fn w_basis(h: i64, sign: &str) -> PyResult<Vec<Vec<String>>> {
    let s = match sign {
        "+" | "plus" => Sign::Plus,
        "-" | "minus" => Sign::Minus,
        _ => return Err(PyValueError::new_err("sign must be '+' or '-'")),
    };
    let ps = dzeta::w_basis(h, s).map_err(err)?;
    Ok(ps
        .basis
        .iter()
        .map(|p| {
            p.coeff_vec((h - 1) as usize)
                .iter()
                .map(rat_to_string)
                .collect()
        })
        .collect())
}

#[pyfunction]
fn verify_exactness(py: Python<'_>, n: i64) -> PyResult<Py<pyo3::types::PyDict>> {
    let rep = dzeta::verify_exactness(n).map_err(err)?;
    let d = pyo3::types::PyDict::new(py);
    d.set_item("weight", rep.weight)?;
    d.set_item("generators", rep.generators)?;
    d.set_item("rank_d", rep.rank_d)?;
    d.set_item("rank_j", rep.rank_j)?;
    d.set_item("dim_w_plus", rep.dim_w_plus)?;
    d.set_item("dim_w_minus", rep.dim_w_minus)?;
    d.set_item("relation_dim", rep.relation_dim)?;
    d.set_item("cert_d_then_v_zero", rep.cert_d_then_v_zero)?;
    d.set_item("cert_j_full_rank", rep.cert_j_full_rank)?;
    d.set_item("cert_middle_exact", rep.cert_middle_exact)?;
    d.set_item("cert_xi_basis", rep.cert_xi_basis)?;
    d.set_item("all_pass", rep.all_pass())?;
    Ok(d.unbind())
}

#[pyfunction]
fn verify_lemma_sym(k: i64) -> PyResult<bool> {
    dzeta::verify_lemma_sym(k).map_err(err)
}

#[pyfunction]
fn verify_membership(n: i64) -> PyResult<bool> {
    dzeta::verify_membership(n).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (s, eps=1e-12))]
fn zeta_single(s: i64, eps: f64) -> PyResult<(f64, f64)> {
    let z = dzeta::zeta_single(s, eps).map_err(err)?;
    Ok((z.value, z.error_bound))
}

#[pyfunction]
#[pyo3(signature = (n1, n2, eps=1e-10))]
fn zeta_double(n1: i64, n2: i64, eps: f64) -> PyResult<(f64, f64)> {
    let z = dzeta::zeta_double(n1, n2, eps).map_err(err)?;
    Ok((z.value, z.error_bound))
}

#[pymodule]
fn dzeta_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(dmatrix, m)?)?;
    m.add_function(wrap_pyfunction!(rank_law, m)?)?;
    m.add_function(wrap_pyfunction!(generator_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(relations, m)?)?;
    m.add_function(wrap_pyfunction!(dim_cusp_forms, m)?)?;
    m.add_function(wrap_pyfunction!(w_basis, m)?)?;
    m.add_function(wrap_pyfunction!(verify_exactness, m)?)?;
    m.add_function(wrap_pyfunction!(verify_lemma_sym, m)?)?;
    m.add_function(wrap_pyfunction!(verify_membership, m)?)?;
    m.add_function(wrap_pyfunction!(zeta_single, m)?)?;
    m.add_function(wrap_pyfunction!(zeta_double, m)?)?;
    Ok(())
}
