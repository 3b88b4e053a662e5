//! Human-readable rendering. Classes are printed both in powers of the
//! hyperplane class and in `[P^k]` form.

use cherncalc_core::{ChowClass, HypersurfaceReport};

pub fn class_line(name: &str, class: &ChowClass) -> String {
    format!("{name:<10} {class}  =  {}", class.to_pk_string())
}

pub fn report(report: &HypersurfaceReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "hypersurface of degree {} in P^{}\n",
        report.d, report.n
    ));
    match report.dim_y {
        None => out.push_str("singularity subscheme: empty (smooth hypersurface)\n"),
        Some(d) => out.push_str(&format!("singularity subscheme: dimension {d}\n")),
    }
    out.push_str(&format!(
        "projective degrees: {:?} (generator degree {})\n",
        report.projective_degrees.degrees(),
        report.projective_degrees.generator_degree()
    ));
    out.push_str(&class_line("segre", &report.segre));
    out.push('\n');
    out.push_str(&class_line("cwma", &report.cwma));
    out.push('\n');
    out.push_str(&class_line("mu", &report.mu));
    out.push('\n');
    out.push_str(&class_line("fulton", &report.fulton));
    out.push('\n');
    out.push_str(&class_line("csm", &report.csm));
    out.push('\n');
    out.push_str(&class_line("milnor", &report.milnor));
    out.push('\n');
    out.push_str(&format!("chi        {}\n", report.chi));
    out
}
