from pathlib import Path


def test_parabolic_kl_structure_exists():
    assert Path('parabolic_kl/cli.py').exists()
    assert Path('parabolic_kl/algebra/hecke_module.py').exists()
    assert Path('parabolic_kl/rules/ls_tree.py').exists()
    assert Path('parabolic_kl/algebra/sn_oracle.py').exists()
    assert Path('setup.py').exists()
