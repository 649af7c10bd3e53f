// Displayed counts, transcribed verbatim (whitespace collapsed).

use super::USpec;

pub(super) struct Display {
    pub lambda: &'static str,
    pub uspec: USpec,
    pub labels: &'static [&'static str],
    pub latex: &'static str,
}

pub(super) static DISPLAYS: &[Display] = &[
    Display { lambda: "7", uspec: USpec::Full, labels: &["Δ_l"], latex: r#"|\Delta_l| = (q^2+q+1) \cdot (q^7-q)."# },
    Display { lambda: "7", uspec: USpec::Full, labels: &["Δ_c"], latex: r#"|\Delta_c| = (q^5-q^2) \cdot (q^7-q)."# },
    Display { lambda: "7", uspec: USpec::Full, labels: &["P^2_7"], latex: r#"\left|\left( \mathcal{P}^2_7 \right)^{F \sigma} \right| = q^6+q^3."# },
    Display { lambda: "6,1", uspec: USpec::Full, labels: &["Δ_{l,1}"], latex: r#"|\Delta_{l,1}| = (q^2+q+1) \cdot (q^6-q^3-q^2+q) \cdot (q^2+q+1)."# },
    Display { lambda: "6,1", uspec: USpec::Full, labels: &["Δ_{l,2}"], latex: r#"|\Delta_{l,2}|=(q^4-q) (q^6-q^2) (q^2+q+1)."# },
    Display { lambda: "6,1", uspec: USpec::Full, labels: &["Δ_{l,3}"], latex: r#"|\Delta_{l,3}|=(q^2+q+1) (q^3-q) (q^6-q^3)."# },
    Display { lambda: "6,1", uspec: USpec::Full, labels: &["Δ_{l,2}∩Δ_{l,3}"], latex: r#"|\Delta_{l,2} \cap \Delta_{l,3}| = (q^4-q) \cdot (q^2+q) \cdot (q^3-q)."# },
    Display { lambda: "6,1", uspec: USpec::Full, labels: &["Δ_c"], latex: r#"|\Delta_c| = (q^5-q^2) (q^6-q^3-q^2+q) (q^2+q+1)."# },
    Display { lambda: "6,1", uspec: USpec::Full, labels: &["Δ_l∩Δ_c"], latex: r#"|\Delta_l \cap \Delta_c| = (q^5-q^2) q^2 (q^3-q)."# },
    Display { lambda: "6,1", uspec: USpec::Full, labels: &["P^2_7"], latex: r#"\left|\left( \mathcal{P}^2_7 \right)^{F \sigma} \right| = q^6-2q^3+1."# },
    Display { lambda: "5,2", uspec: USpec::Full, labels: &["P^2_7"], latex: r#"\left|\left( \mathcal{P}^2_7 \right)^{F \sigma} \right| = q^6-q^2."# },
    Display { lambda: "5,1^2", uspec: USpec::Full, labels: &["P^2_7"], latex: r#"\left|\left( \mathcal{P}^2_7 \right)^{F \sigma} \right| = q^6-q^2."# },
    Display { lambda: "4,3", uspec: USpec::Full, labels: &["Δ_l"], latex: r#"|\Delta_l| = q^{13} + 2q^{12} - 3q^{10} - 2q^9 + q^8 + q^7 - q^6 - q^5 + q^4 + q^3."# },
    Display { lambda: "4,3", uspec: USpec::Full, labels: &["Δ_c"], latex: r#"|\Delta_c| = (q^5-q^2)(q^4-q^2)(q^3-q)."# },
    Display { lambda: "4,3", uspec: USpec::Full, labels: &["P^2_7"], latex: r#"\left|\left( \mathcal{P}^2_7 \right)^{F \sigma} \right| = q^6-q^5-2q^4+q^3+q^2:"# },
    Display { lambda: "4,2,1", uspec: USpec::Full, labels: &["Δ_{l,2}^2"], latex: r#"|\Delta_{l,2}^2| = 2(q^4-q)(q^4-q^2)q^2(q^2+q+1)."# },
    Display { lambda: "4,2,1", uspec: USpec::Full, labels: &["Δ_{l,2}^3"], latex: r#"|\Delta_{l,2}^3| = 2(q^4-q)(q^4-q^2)(q^2+q+1)."# },
    Display { lambda: "4,2,1", uspec: USpec::Full, labels: &["Δ_{l,3}^1"], latex: r#"|\Delta_{l,3}^1| = (q^2+q+1)(q^4-q^2)(q+1)(q^4-q)."# },
    Display { lambda: "4,2,1", uspec: USpec::Full, labels: &["Δ_{l,3}^2"], latex: r#"|\Delta_{l,3}^2| = (q^4-q)^2(q^4-q^2)."# },
    Display { lambda: "4,2,1", uspec: USpec::Full, labels: &["Δ_{l,2}^1∩Δ_{l,3}^1"], latex: r#"(q^2+q+1)(q^4-q^2)(q^2-q)(q+1)"# },
    Display { lambda: "4,2,1", uspec: USpec::Full, labels: &["Δ_{l,2}^2∩Δ_{l,3}^2"], latex: r#"2(q^4-q)(q^4-q^2)q^2"# },
    Display { lambda: "4,2,1", uspec: USpec::Full, labels: &["Δ_{l,2}^3∩Δ_{l,3}^2"], latex: r#"2(q^4-q)(q^4-q^2),"# },
    Display { lambda: "4,2,1", uspec: USpec::Full, labels: &["Δ_l"], latex: r#"|\Delta_l| = q^{13}+5q^{12}-4q^{10}-5q^9-3q^8+2q^7+q^6+3q^5+q^4-q^3."# },
    Display { lambda: "4,2,1", uspec: USpec::Full, labels: &["Δ_c"], latex: r#"|\Delta_c| = (q^5-q^2)(q^4-q^2)(q^2-q)(q^2+q+1)."# },
    Display { lambda: "4,2,1", uspec: USpec::Full, labels: &["Δ_{l,3}^2∩Δ_c"], latex: r#"|\Delta_{l,3}^2 \cap \Delta_c| = (q^5-q^2)(q^4-q^2)(q^2-q)."# },
    Display { lambda: "4,2,1", uspec: USpec::Full, labels: &["Δ_{l,6}∩Δ_c"], latex: r#"|\Delta_{l,6} \cap \Delta_c| = (q^5-q^2)(q^4-q^2)(q^2-q)(q+1)."# },
    Display { lambda: "4,2,1", uspec: USpec::Full, labels: &["Δ_{l,3}^2∩Δ_{l,6}∩Δ_c, outside"], latex: r#"\frac{1}{2}(q^5-q^2)q(q+1)(q-1)(q^2-1)"# },
    Display { lambda: "4,2,1", uspec: USpec::Full, labels: &["Δ_{l,3}^2∩Δ_{l,6}∩Δ_c, inside"], latex: r#"\frac{1}{2}(q^5-q^2)(q^2-q)(q+1)(q^2-1)"# },
    Display { lambda: "4,2,1", uspec: USpec::Full, labels: &["Δ_l∩Δ_c"], latex: r#"|\Delta_l \cap \Delta_c| = q^{12}+q^{11}-4q^{10}-2q^9+3q^8+4q^7-4q^5+q^3,"# },
    Display { lambda: "4,2,1", uspec: USpec::Full, labels: &["P^2_7"], latex: r#"\left|\left( \mathcal{P}^2_7 \right)^{F \sigma} \right| = q^6-q^5-2q^4+q^3-2q^2+3."# },
    Display { lambda: "4,1^3", uspec: USpec::LastThreeNotCollinear, labels: &["Δ_{l,1}"], latex: r#"(q^2+q+1)^2(q^4-q^2)(q^2+q)q^2"# },
    Display { lambda: "4,1^3", uspec: USpec::LastThreeNotCollinear, labels: &["Δ_{l,2}"], latex: r#"3(q^2+q+1)(q^2-q)(q^4-q^2)(q^2+q)q^2"# },
    Display { lambda: "4,1^3", uspec: USpec::LastThreeNotCollinear, labels: &["Δ_l"], latex: r#"|\Delta_{l}|=4q^{12}+6q^{11}+q^{10}-4q^9-5q^8-q^7-q^5."# },
    Display { lambda: "4,1^3", uspec: USpec::LastThreeNotCollinear, labels: &["Δ_c, one point free"], latex: r#"3(q^5-q^2)(q^4-q^2)(q+1)q \cdot q^2."# },
    Display { lambda: "4,1^3", uspec: USpec::LastThreeNotCollinear, labels: &["Δ_c, all seven on the conic"], latex: r#"(q^5-q^2)(q^4-q^2)(q+1)q(q-1)"# },
    Display { lambda: "4,1^3", uspec: USpec::LastThreeNotCollinear, labels: &["Δ_c"], latex: r#"|\Delta_{c}| = 3q^{13}+q^{12}-3q^{11}-2q^{10}-q^9+q^8-q^7+2q^5."# },
    Display { lambda: "4,1^3", uspec: USpec::LastThreeNotCollinear, labels: &["Δ_l∩Δ_c (i)"], latex: r#"3(q^5-q^2)(q+1)q(q^2-1)q"# },
    Display { lambda: "4,1^3", uspec: USpec::LastThreeNotCollinear, labels: &["Δ_l∩Δ_c (ii)"], latex: r#"\frac{3}{2}(q^5-q^2)(q+1)q(q^2-1)(q-1)^2"# },
    Display { lambda: "4,1^3", uspec: USpec::LastThreeNotCollinear, labels: &["Δ_l∩Δ_c (iii)"], latex: r#"\frac{3}{2} (q^5-q^2)(q^2-q)(q^2-1)(q+1)(q-1)"# },
    Display { lambda: "4,1^3", uspec: USpec::LastThreeNotCollinear, labels: &["Δ_l∩Δ_c"], latex: r#"|\Delta_l \cap \Delta_c| = 3q^{11}-3q^9-3q^5+3q^3,"# },
    Display { lambda: "4,1^3", uspec: USpec::LastThreeNotCollinear, labels: &["P^2_7"], latex: r#"\left|\left( \mathcal{P}^2_7 \right)^{F \sigma} \right| = q^6-q^5-2q^4+q^3-2q^2+3."# },
    Display { lambda: "3^2,1", uspec: USpec::Full, labels: &["Δ_{l,1}", "Δ_{l,4}"], latex: r#"|\Delta_{l,1}|=|\Delta_{l,4}|= (q^2+q+1)^2(q^3-q)(q^6+q^3-q^2-q-3)."# },
    Display { lambda: "3^2,1", uspec: USpec::Full, labels: &["Δ_{l,2}", "Δ_{l,3}"], latex: r#"|\Delta_{l,2}|=|\Delta_{l,3}|=3(q^6-q^5-q^4+q^3)(q^3-1)(q^2+q+1)."# },
    Display { lambda: "3^2,1", uspec: USpec::Full, labels: &["Δ_{l,5}"], latex: r#"|\Delta_{l,5}|=3(q^2+q+1)(q^3-q)q^3(q^3-1)."# },
    Display { lambda: "3^2,1", uspec: USpec::Full, labels: &["Δ_{l,1}∩Δ_{l,3}", "Δ_{l,2}∩Δ_{l,4}"], latex: r#"|\Delta_{l,1} \cap \Delta_{l,3}| = |\Delta_{l,2} \cap \Delta_{l,4}| = 3(q^6-q^5-q^4+q^3)(q^2+q+1)^2."# },
    Display { lambda: "3^2,1", uspec: USpec::Full, labels: &["Δ_{l,1}∩Δ_{l,4}"], latex: r#"|\Delta_{l,1} \cap \Delta_{l,4}| = (q^2+q+1)^2(q^3-q)(q^3-q-3) + (q^2+q+1)^2(q^2+q)(q^3-q)^2."# },
    Display { lambda: "3^2,1", uspec: USpec::Full, labels: &["Δ_{l,1}∩Δ_{l,5}", "Δ_{l,4}∩Δ_{l,5}"], latex: r#"|\Delta_{l,1} \cap \Delta_{l,5}| = |\Delta_{l,4} \cap \Delta_{l,5}| = 3(q^2+q+1)(q^3-q)q^2(q^3-1)."# },
    Display { lambda: "3^2,1", uspec: USpec::Full, labels: &["Δ_{l,2}∩Δ_{l,5}", "Δ_{l,3}∩Δ_{l,5}"], latex: r#"|\Delta_{l,2} \cap \Delta_{l,5}| = |\Delta_{l,3} \cap \Delta_{l,5}| = 3 (q^6-q^5-q^4+q^3)(q^2+q+1)."# },
    Display { lambda: "3^2,1", uspec: USpec::Full, labels: &["Δ_{l,1}∩Δ_{l,4}∩Δ_{l,5}"], latex: r#"|\Delta_{l,1} \cap \Delta_{l,4} \cap \Delta_{l,5}| = 3(q^2+q+1)(q^3-q)q^2(q^2-1)."# },
    Display { lambda: "3^2,1", uspec: USpec::Full, labels: &["Δ_c"], latex: r#"|\Delta_c| = (q^5-q^2)(q^3-q)(q^3-q-3)(q^2+q+1)."# },
    Display { lambda: "3^2,1", uspec: USpec::Full, labels: &["Δ_l∩Δ_c"], latex: r#"|\Delta_{l} \cap \Delta_c| = 3(q^5-q^2)q^2(q^3-q)."# },
    Display { lambda: "3^2,1", uspec: USpec::Full, labels: &["P^2_7"], latex: r#"\left|\left( \mathcal{P}^2_7 \right)^{F \sigma} \right| = q^6-2q^5-2q^4-8q^3+16q^2+10q+21."# },
    Display { lambda: "3,2^2", uspec: USpec::Full, labels: &["Δ_{l,1}"], latex: r#"|\Delta_{l,1}| = (q^2+q+1)(q^3-q)(q^4-q)(q^4-q-2),"# },
    Display { lambda: "3,2^2", uspec: USpec::Full, labels: &["Δ_{l,2}"], latex: r#"|\Delta_{l,2}| = (q^2+q+1)(q^2-q)(q^2-q-2)(q^6+q^3-q^2-q)."# },
    Display { lambda: "3,2^2", uspec: USpec::Full, labels: &["Δ_{l,1}∩Δ_{l,2}"], latex: r#"|\Delta_{l,1} \cap \Delta_{l,2}| =(q^2+q+1)^2(q^3-q)(q^2-q)(q^2-q-2)."# },
    Display { lambda: "3,2^2", uspec: USpec::Full, labels: &["Δ_c"], latex: r#"|\Delta_{c}| = (q^5-q^2)(q^3-q)(q^2-q)(q^2-q-2),"# },
    Display { lambda: "3,2^2", uspec: USpec::Full, labels: &["P^2_7"], latex: r#"\left|\left( \mathcal{P}^2_7 \right)^{F \sigma} \right| = q^6-q^5-2q^4+3q^3+q^2-2q."# },
    Display { lambda: "3,2,1^2", uspec: USpec::Full, labels: &["Δ_{l,1}"], latex: r#"|\Delta_{l,1}| = (q^2+q+1)^2(q^3-q)(q^4-q)(q^2+q)."# },
    Display { lambda: "3,2,1^2", uspec: USpec::Full, labels: &["Δ_{l,2}^6", "Δ_{l,2}^7"], latex: r#"|\Delta_{l,2}^6|=|\Delta_{l,2}^7|= (q^2+q+1)(q^2-q)(q+1)(q^6+q^3-q^2-q)(q^2+q)."# },
    Display { lambda: "3,2,1^2", uspec: USpec::Full, labels: &["Δ_{l,1}∩Δ_{l,2}^6", "Δ_{l,1}∩Δ_{l,2}^7"], latex: r#"|\Delta_{l,1} \cap \Delta_{l,2}^6| = |\Delta_{l,1} \cap \Delta_{l,2}^7| = (q^2+q+1)^2(q^3-q)(q^2-q)(q+1)(q^2+q),"# },
    Display { lambda: "3,2,1^2", uspec: USpec::Full, labels: &["Δ_{l,2}^6∩Δ_{l,2}^7"], latex: r#"|\Delta_{l,2}^6 \cap \Delta_{l,2}^7| = (q^2+q+1)(q^2-q)(q+1)q(q^6+q^3-q^2-q)."# },
    Display { lambda: "3,2,1^2", uspec: USpec::Full, labels: &["Δ_{l,1}∩Δ_{l,2}^6∩Δ_{l,2}^7"], latex: r#"|\Delta_{l,1} \cap \Delta_{l,2}^6 \cap \Delta_{l,2}^7| = (q^2+q+1)^2(q^3-q)(q^2-q)(q+1)q."# },
    Display { lambda: "3,2,1^2", uspec: USpec::Full, labels: &["Δ_c, with multiplicity"], latex: r#"2(q^5-q^2)(q^3-q)(q^2-q)(q+1)(q^2+q)."# },
    Display { lambda: "3,2,1^2", uspec: USpec::Full, labels: &["Δ_c, excess"], latex: r#"(q^5-q^2)(q^3-q)(q^2-q)(q+1)q,"# },
    Display { lambda: "3,2,1^2", uspec: USpec::Full, labels: &["Δ_{l,2}^6∩Δ_c", "Δ_{l,2}^7∩Δ_c"], latex: r#"|\Delta_{l,2}^6 \cap \Delta_{c}| = |\Delta_{l,2}^7 \cap \Delta_{c}| = (q^5-q^2)(q^3-q)(q^2-q)(q+1)^2,"# },
    Display { lambda: "3,2,1^2", uspec: USpec::Full, labels: &["Δ_l∩Δ_c"], latex: r#"|\Delta_{l} \cap \Delta_{c}| = 2(q^5-q^2)(q^3-q)(q^2-q)(q+1)^2."# },
    Display { lambda: "3,2,1^2", uspec: USpec::Full, labels: &["P^2_7"], latex: r#"\left|\left( \mathcal{P}^2_7 \right)^{F \sigma} \right| = q^6-3q^5-q^4+5q^3-2q."# },
    Display { lambda: "3,1^4", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_l"], latex: r#"|\Delta_{l}|= (q^2+q+1)(q^2+q)q^2(q^2-2q+1)(q^2+q+1)(q^3-q)."# },
    Display { lambda: "3,1^4", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_c, with multiplicity"], latex: r#"4(q^5-q^2)(q^3-q)(q+1)q(q-1)(q^2-2q+1)."# },
    Display { lambda: "3,1^4", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_c, excess"], latex: r#"3(q^5-q^2)(q^3-q)(q+1)q(q-1)(q-2)."# },
    Display { lambda: "3,1^4", uspec: USpec::FirstFourGeneralPosition, labels: &["P^2_7"], latex: r#"\left|\left( \mathcal{P}^2_7 \right)^{F \sigma} \right| = q^6-5q^5+10q^4-5q^3-11q^2+10q."# },
    Display { lambda: "2^3,1", uspec: USpec::FirstSixNoThreeCollinear, labels: &["Δ_{l,1}^a", "Δ_{l,1}^b", "Δ_{l,1}^c"], latex: r#"|\Delta_{l,1}^a|=|\Delta_{l,1}^b|=|\Delta_{l,1}^c|=(q^4-q)(q^4-q^2)(q^4-6q^2+q+8)(q+1),"# },
    Display { lambda: "2^3,1", uspec: USpec::FirstSixNoThreeCollinear, labels: &["Δ_{l,2}^{P_1,Q_i}", "Δ_{l,2}^{P_1,R_i}", "Δ_{l,2}^{Q_1,R_i}"], latex: r#"|\Delta_{l,2}^{P_1,Q_i}| = |\Delta_{l,2}^{P_1,R_i}| = |\Delta_{l,2}^{Q_1,R_i}| = (q^4-q)(q^4-q^2)(q^4-6q^2+q+8)."# },
    Display { lambda: "2^3,1", uspec: USpec::FirstSixNoThreeCollinear, labels: &["Δ_{l,1}^a∩Δ_{l,1}^b", "Δ_{l,1}^a∩Δ_{l,1}^c", "Δ_{l,1}^b∩Δ_{l,1}^c"], latex: r#"|\Delta_{l,1}^a \cap \Delta_{l,1}^b| = |\Delta_{l,1}^a \cap \Delta_{l,1}^c| = |\Delta_{l,1}^b \cap \Delta_{l,1}^c| = (q^4-q)(q^4-q^2)(q^4-6q^2+q+8)."# },
    Display { lambda: "2^3,1", uspec: USpec::FirstSixNoThreeCollinear, labels: &["Δ_{l,1}^a∩Δ_{l,2}^{Q_1,R_i}", "Δ_{l,1}^b∩Δ_{l,2}^{P_1,R_i}", "Δ_{l,1}^c∩Δ_{l,2}^{P_1,Q_i}"], latex: r#"& |\Delta_{l,1}^a \cap \Delta_{l,2}^{Q_1,R_i}| = |\Delta_{l,1}^b \cap \Delta_{l,2}^{P_1,R_i}| = |\Delta_{l,1}^c \cap \Delta_{l,2}^{P_1,Q_i}| = \\ & = (q^4-q)(q^4-q^2)(q^2-q)+ (q^4-q)(q^4-q^2)q(q^2-q-2)."# },
    Display { lambda: "2^3,1", uspec: USpec::FirstSixNoThreeCollinear, labels: &["Δ_{l,1}^a∩Δ_{l,1}^b∩Δ_{l,1}^c"], latex: r#"|\Delta_{l,1}^a \cap \Delta_{l,1}^b \cap \Delta_{l,1}^c| & = 2(q^4-q)(q^4-q^2)(q^2-q-2)+\\ & + (q^4-q)(q^4-q^2)(q-3)(q^2-q-4)."# },
    Display { lambda: "2^3,1", uspec: USpec::FirstSixNoThreeCollinear, labels: &["Δ_c"], latex: r#"|\Delta_{c}| = (q^5-q^2)(q^2-q)(q^2-q-2)(q^2-q-4)(q^2+q+1)."# },
    Display { lambda: "2^3,1", uspec: USpec::FirstSixNoThreeCollinear, labels: &["Δ_{l,1}^a∩Δ_c", "Δ_{l,1}^b∩Δ_c", "Δ_{l,1}^c∩Δ_c"], latex: r#"|\Delta_{l,1}^a \cap \Delta_{c}| = |\Delta_{l,1}^b \cap \Delta_{c}| = |\Delta_{l,1}^c \cap \Delta_{c}| = \\ = (q^5-q^2)(q^2-q)(q^2-q-2)(q^2-q-4)(q+1)."# },
    Display { lambda: "2^3,1", uspec: USpec::FirstSixNoThreeCollinear, labels: &["Δ_{l,2}^{P_1,Q_i}∩Δ_c", "Δ_{l,2}^{P_1,R_i}∩Δ_c", "Δ_{l,2}^{Q_1,R_i}∩Δ_c"], latex: r#"& |\Delta_{l,2}^{P_1,Q_i} \cap \Delta_{c}| = |\Delta_{l,2}^{P_1,R_i} \cap \Delta_{c}| = |\Delta_{l,2}^{Q_1,R_i} \cap \Delta_{c}| = \\ & = (q^5-q^2)(q^2-q)(q^2-q-2)(q^2-q-4)."# },
    Display { lambda: "2^3,1", uspec: USpec::FirstSixNoThreeCollinear, labels: &["Δ_{l,1}^a∩Δ_{l,1}^b∩Δ_c", "Δ_{l,1}^a∩Δ_{l,1}^c∩Δ_c", "Δ_{l,1}^b∩Δ_{l,1}^c∩Δ_c"], latex: r#"& |\Delta_{l,1}^a \cap \Delta_{l,1}^b \cap \Delta_{c}| = |\Delta_{l,1}^a \cap \Delta_{l,1}^c \cap \Delta_{c}| = |\Delta_{l,1}^b \cap \Delta_{l,1}^c \cap \Delta_{c}| = \\ & = (q^5-q^2)(q^2-q)(q^2-q-2)(q^2-q-4)."# },
    Display { lambda: "2^3,1", uspec: USpec::FirstSixNoThreeCollinear, labels: &["Δ_{l,1}^a∩Δ_{l,2}^{Q_1,R_1}∩Δ_c, O outside"], latex: r#"\frac{1}{2}(q^5-q^2)(q+1)q(q-1)(q^2-2q+1)."# },
    Display { lambda: "2^3,1", uspec: USpec::FirstSixNoThreeCollinear, labels: &["Δ_{l,1}^a∩Δ_{l,2}^{Q_1,R_1}∩Δ_c, O inside"], latex: r#"\frac{1}{2}(q^5-q^2)(q^2-q)(q+1)(q^2-2q-3)."# },
    Display { lambda: "2^3,1", uspec: USpec::FirstSixNoThreeCollinear, labels: &["Δ_{l,1}^a∩Δ_{l,1}^b∩Δ_{l,1}^c∩Δ_c, O outside"], latex: r#"\frac{1}{2}(q^5-q^2)(q+1)q(q-1)(q-3)(q-5)."# },
    Display { lambda: "2^3,1", uspec: USpec::FirstSixNoThreeCollinear, labels: &["Δ_{l,1}^a∩Δ_{l,1}^b∩Δ_{l,1}^c∩Δ_c, O inside"], latex: r#"\frac{1}{2}(q^5-q^2)(q+1)q(q+1)(q-1)(q-3)."# },
    Display { lambda: "2^3,1", uspec: USpec::FirstSixNoThreeCollinear, labels: &["P^2_7"], latex: r#"\left|\left( \mathcal{P}^2_7 \right)^{F \sigma} \right| = q^6-3q^5-6q^4+19q^3+6q^2-24q+7."# },
    Display { lambda: "2^2,1^3", uspec: USpec::FirstFiveGeneralPosition, labels: &["Δ_{l,1}^i"], latex: r#"|\Delta_{l,1}^i| & = (q^2+q+1)(q^2+q)q^2(q^4-3q^3+3q^2-q)(q+1)(q^2-q)"# },
    Display { lambda: "2^2,1^3", uspec: USpec::FirstFiveGeneralPosition, labels: &["Δ_{l,2}"], latex: r#"|\Delta_{l,2}| & = (q^2+q+1)(q^2+q)q^2(q^4-3q^3+3q^2-q)(q^2-q-2)"# },
    Display { lambda: "2^2,1^3", uspec: USpec::FirstFiveGeneralPosition, labels: &["Δ_{l,3}^{i,j}"], latex: r#"|\Delta_{l,3}^{i,j}| = (q^2+q+1)(q^2+q)q^2(q^4-3q^3+3q^2-q)(q^2-1)."# },
    Display { lambda: "2^2,1^3", uspec: USpec::FirstFiveGeneralPosition, labels: &["Δ_{l,1}^i∩Δ_{l,1}^j"], latex: r#"|\Delta_{l,1}^i \cap \Delta_{l,1}^j| = (q^2+q+1)(q^2+q)q^2(q^4-3q^3+3q^2-q)(q^2-q)."# },
    Display { lambda: "2^2,1^3", uspec: USpec::FirstFiveGeneralPosition, labels: &["Δ_{l,1}^i∩Δ_{l,3}^{j,k}"], latex: r#"|\Delta_{l,1}^i \cap \Delta_{l,3}^{j,k}| = (q^2+q+1)(q^2+q)q^2(q^4-3q^3+3q^2-q)q."# },
    Display { lambda: "2^2,1^3", uspec: USpec::FirstFiveGeneralPosition, labels: &["Δ_{l,3}^{1,i}∩Δ_{l,3}^{2,j}"], latex: r#"|\Delta_{l,3}^{1,i} \cap \Delta_{l,3}^{2,j}| = (q^2+q+1)(q^2+q)q^2(q^4-3q^3+3q^2-q)."# },
    Display { lambda: "2^2,1^3", uspec: USpec::FirstFiveGeneralPosition, labels: &["Δ_{l,1}^i∩Δ_{l,1}^j∩Δ_{l,3}^{r,s}"], latex: r#"|\Delta_{l,1}^i \cap \Delta_{l,1}^j \cap \Delta_{l,3}^{r,s}|= (q^2+q+1)(q^2+q)q^2(q^4-3q^3+3q^2-q)."# },
    Display { lambda: "2^2,1^3", uspec: USpec::FirstFiveGeneralPosition, labels: &["Δ_{l,1}^i∩Δ_{l,3}^{1,j}∩Δ_{l,3}^{2,s}"], latex: r#"|\Delta_{l,1}^i \cap \Delta_{l,3}^{1,j} \cap \Delta_{l,3}^{2,s}| = (q^2+q+1)(q^2+q)(q^2-q)^2(q-1)."# },
    Display { lambda: "2^2,1^3", uspec: USpec::FirstFiveGeneralPosition, labels: &["Δ_c, one choice of P"], latex: r#"(q^5-q^2)(q+1)q(q^2-q)(q^2-q-2)(q^2-q)."# },
    Display { lambda: "2^2,1^3", uspec: USpec::FirstFiveGeneralPosition, labels: &["Δ_c, excess"], latex: r#"2 \cdot (q^5-q^2)(q+1)q(q-1)(q^2-q)(q^2-q-2)"# },
    Display { lambda: "2^2,1^3", uspec: USpec::FirstFiveGeneralPosition, labels: &["Δ_{l,1}^i∩Δ_c, P_i outside"], latex: r#"\frac{1}{2}(q^5-q^2)(q+1)q(q-1)(q^2+1)(q^2-2q+1)."# },
    Display { lambda: "2^2,1^3", uspec: USpec::FirstFiveGeneralPosition, labels: &["Δ_{l,1}^i∩Δ_c, P_i inside"], latex: r#"\frac{1}{2}(q^5-q^2)(q^2-q)(q+1)(q+1)(q-1)(q^2-2q-1)"# },
    Display { lambda: "2^2,1^3", uspec: USpec::FirstFiveGeneralPosition, labels: &["Δ_{l,3}^{i,j}∩Δ_c, P_j outside"], latex: r#"\frac{1}{2}(q^5-q^2)(q+1)q(q^2+1)(q^2-2q+1)"# },
    Display { lambda: "2^2,1^3", uspec: USpec::FirstFiveGeneralPosition, labels: &["Δ_{l,3}^{i,j}∩Δ_c, P_j inside"], latex: r#"\frac{1}{2}(q^5-q^2)(q^2-q)(q+1)(q-1)(q^2-2q-3)"# },
    Display { lambda: "2^2,1^3", uspec: USpec::FirstFiveGeneralPosition, labels: &["P^2_7"], latex: r#"\left|\left( \mathcal{P}^2_7 \right)^{F \sigma} \right| = q^6-7q^5+10q^4+15q^3-26q^2-8q+15."# },
    Display { lambda: "2,1^5", uspec: USpec::FirstFiveGeneralPosition, labels: &["Δ_l"], latex: r#"|\Delta_{l}| = (q^2+q+1)(q^2+q)q^2(q^2-2q+1)(q^2-5q+6)(5q-5)(q^2-q)."# },
    Display { lambda: "2,1^5", uspec: USpec::FirstFiveGeneralPosition, labels: &["Δ_c, with multiplicity"], latex: r#"5(q^5-q^2)(q+1)q(q-1)(q-2)(q^2-q)(q^2-5q+6)."# },
    Display { lambda: "2,1^5", uspec: USpec::FirstFiveGeneralPosition, labels: &["Δ_c, excess"], latex: r#"4(q^5-q^2)(q+1)q(q-1)(q-2)(q-3)(q^2-q),"# },
    Display { lambda: "2,1^5", uspec: USpec::FirstFiveGeneralPosition, labels: &["A_{i,0}^out"], latex: r#"|A_{i,0}^{\mathrm{out}}| = \frac{1}{2}(q^5-q^2)(q+1)q(q-1)(q-1)(q-3)(q-5)(q-7)."# },
    Display { lambda: "2,1^5", uspec: USpec::FirstFiveGeneralPosition, labels: &["A_{i,1}^out"], latex: r#"|A_{i,1}^{\mathrm{out}}| = 4 \cdot 2 \cdot \frac{1}{2}(q^5-q^2)(q+1)q(q-1)(q-1)(q-3)(q-5)."# },
    Display { lambda: "2,1^5", uspec: USpec::FirstFiveGeneralPosition, labels: &["A_{i,2}^out"], latex: r#"|A_{i,2}^{\mathrm{out}}| = \binom{4}{2} \cdot 2 \cdot \frac{1}{2}(q^5-q^2)(q+1)q(q-1)(q-1)(q-3)."# },
    Display { lambda: "2,1^5", uspec: USpec::FirstFiveGeneralPosition, labels: &["A_i^in"], latex: r#"|A_i^{\mathrm{in}}| = \frac{1}{2}(q^5-q^2)(q^2-q)(q+1)(q-1)(q-3)(q-5)."# },
    Display { lambda: "2,1^5", uspec: USpec::FirstFiveGeneralPosition, labels: &["P^2_7"], latex: r#"\left|\left( \mathcal{P}^2_7 \right)^{F \sigma} \right| = q^6-15q^5+90q^4-265q^3+374q^2-200q+15."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["U"], latex: r#"|U(\lambda)| = (q^2+q+1)(q^2+q)q^2(q^2-2q+1)(q^2+q-3)(q^2+q-4)(q^2+q-5)."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_{l,1}({i})"], latex: r#"|\Delta_{l,1}(\{i\})| = \underbrace{(q^2+q+1)(q^2+q)q^2(q^2-2q+1)}_{|\mathrm{PGL}(3)|}(6q-9)(q^2+q-4)(q^2+q-5)."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_{l,1}({i,j})"], latex: r#"|\Delta_{l,1}(\{i,j\})| = |\mathrm{PGL}(3)| \cdot (6q-9)(6q-10)(q^2+q-5),"# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_{l,1}({5,6,7})"], latex: r#"|\Delta_{l,1}(\{5,6,7\})| = |\mathrm{PGL}(3)| \cdot (6q-9)(6q-10)(6q-11)."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_{l,1}"], latex: r#"|\Delta_{l,1}|=|\mathrm{PGL}(3)| \cdot (18q^5-99q^4+252q^3-414q^2+417q-180)."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_{l,2}^r({i,j})"], latex: r#"|\Delta_{l,2}^r(\{i,j\})| = |\mathrm{PGL}(3)| \cdot (q-2)(q-3)(q-4)(q^2-5q+4)."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_{l,2}^r({5,6})∩Δ_{l,2}^r({5,7})∩Δ_{l,2}^r({6,7})"], latex: r#"|\mathrm{PGL}(3)| \cdot (q-2)(q-3)(q-4)(q-5),"# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_{l,2}^r({i,j})∩Δ_{l,2}^s({i,k})"], latex: r#"|\Delta_{l,2}^r(\{i,j\}) \cap \Delta_{l,2}^s(\{i,k\})| = |\mathrm{PGL}(3)| \cdot (q^2-5q+6) (q-4)^2."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["T^{r,s,t}"], latex: r#"|T^{r,s,t}| = |\mathrm{PGL}(3)| \cdot \left( (q-2)(q-3)^2 + (q-2)^2 \right)."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["T^{r,s,t}_i"], latex: r#"|T^{r,s,t}_i|=|\mathrm{PGL}(3)| \cdot (q-2)^2."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["T^{r,s,t}_i∩T^{r,s,t}_j"], latex: r#"|T^{r,s,t}_{i} \cap T^{r,s,t}_j| = |\mathrm{PGL}(3)| \cdot (q-2)."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_{l,2}"], latex: r#"\Delta_{l,2} = |\mathrm{PGL}(3)| \cdot (12q^5-212q^4+1504q^3-5320q^2+9296q-6360)."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_{l,3}({Q_r,Q_s})"], latex: r#"|\Delta_{l,3}(\{Q_r,Q_s\})| = |\mathrm{PGL}(3)| \cdot (q-3)(q-4)(q-5)."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_{l,3}({Q_r})"], latex: r#"|\Delta_{l,3}(\{Q_r\})| = |\mathrm{PGL}(3)| \cdot (q-3)(q-4)(q-5)(q-6)."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_{l,3}(∅)"], latex: r#"|\Delta_{l,3}(\emptyset)|=|\mathrm{PGL}(3)| \cdot (q^2-6q+9)(q-5)(q-6)(q-7)."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_{l,3}"], latex: r#"|\Delta_{l,3}| = |\mathrm{PGL}(3)| \cdot (q^5-21q^4+173q^3-693q^2+1338q-990)"# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_l"], latex: r#"|\Delta_{l}|=|\mathrm{PGL}(3)| \cdot (31q^5-332q^4+1929q^3-6427q^2+11051q-7530)."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["N_1"], latex: r#"N_1:=4(q^5-q^2)(q+1)q(q-1)(q-2)(q-3)(q-4)(q^2-2q-2),"# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["N_2"], latex: r#"N_2 := 3(q^5-q^2)(q+1)q(q-1)(q-2)(q-3)(q-4)(q^2+q-5),"# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["N_7"], latex: r#"N_7:=(q^5-q^2)(q+1)q(q-1)(q-2)(q-3)(q-4)(q-5),"# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_c"], latex: r#"|\Delta_{c}| = |\mathrm{PGL}(3)| \cdot (7q^5-74q^4+288q^3-517q^2+446q-168)"# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["N_1^{5,6,7}"], latex: r#"N_1^{5,6,7} := 3 \cdot \binom{6}{2} \cdot (q^5-q^2)(q+1)q(q-1)^2(q-2)(q-3)(q-4)."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["N_2^{5,6,7}"], latex: r#"N_2^{5,6,7}= 3 \cdot \frac{1}{2} \cdot \binom{6}{4} \cdot \binom{4}{2} \cdot (q^5-q^2)(q+1)q(q-1)(q-2)(q-3)(q-4)."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["N_{3,out}^{5,6,7}"], latex: r#"N_{3,\mathrm{out}}^{5,6,7} = 3 \cdot (q^5-q^2) \cdot \frac{1}{2}(q+1)q \cdot (q-1) \cdot 5 \cdot (q-3) \cdot 3 \cdot (q-5)."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["N_{3,in}^{5,6,7}"], latex: r#"N_{3,\mathrm{in}}^{5,6,7} = 3 \cdot (q^5-q^2) \cdot \frac{1}{2}(q-1)q \cdot (q+1) \cdot 5 \cdot (q-1) \cdot 3 \cdot (q-3)."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["N_1^{1,2,3,4}"], latex: r#"N_{1}^{1,2,3,4}= 24 q^3(q-2)(q-3)(q-4)(2q-5)(q+1)(q^2+q+1)(q-1)^2."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["N_2^{1,2,3,4}"], latex: r#"N_2^{1,2,3,4} = 36q^3(q+1)(q^2+q+1)(5q^3-37q^2+82q-60)(q-1)^2."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["N_{3,out}^{1,2,3,4}"], latex: r#"N_{3,\mathrm{out}}^{1,2,3,4} = 4 \cdot (q^5-q^2) \cdot \frac{1}{2}(q+1)q \cdot (q-1) \cdot 3 \cdot (q-3) \cdot 2 \cdot (q-5)."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["N_{3,in}^{1,2,3,4}"], latex: r#"N_{3,\mathrm{in}}^{1,2,3,4} = 4 \cdot (q^5-q^2) \cdot \frac{1}{2}(q-1)q \cdot (q+1) \cdot 3 \cdot (q-1) \cdot 2 \cdot (q-3),"# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["N_3^{1,2,3,4}"], latex: r#"N_3^{1,2,3,4} = 192q^3(q+1)(q^2+q+1)(q^2-3q+3)(q-1)^2."# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["Δ_l∩Δ_c"], latex: r#"|\Delta_l \cap \Delta_c| = |\mathrm{PGL}(3)| \cdot (93q^4-1245q^3+6195q^2-13470q+10737),"# },
    Display { lambda: "1^7", uspec: USpec::FirstFourGeneralPosition, labels: &["P^2_7"], latex: r#"\left|\left( \mathcal{P}^2_7 \right)^{F \sigma} \right| = q^6-35q^5+490q^4-3485q^3+13174q^2-24920q+18375."# },
];

/// Intersections the text shows to be empty, with the sentence saying so.
pub(super) static EMPTY_INTERSECTIONS: &[(&str, USpec, &str)] = &[
    ("7", USpec::Full, r#"We conclude that $\Delta_l$ and $\Delta_c$ are disjoint."#),
    ("4,3", USpec::Full, r#"Since no three points on a smooth conic lie on a line we conclude that the intersection $\Delta_{l} \cap \Delta_{c}$ is empty."#),
    ("3,2^2", USpec::Full, r#"We thus have that $\Delta_{c}$ is disjoint from $\Delta_{l}$."#),
    ("3,1^4", USpec::FirstFourGeneralPosition, r#"Since $\Delta_l$ and $\Delta_c$ are disjoint we are done"#),
];
