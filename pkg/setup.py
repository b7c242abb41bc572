from setuptools import setup

setup(
    name="algmod",
    version="0.0.001",
    license="GPL",
    description="algmod decides algebraicity of modules for finite groups over finite fields",
    packages=[
        "algmod",
        "algmod.algtest",
        "algmod.cli",
        "algmod.exactla",
        "algmod.globals",
        "algmod.homalg",
        "algmod.meataxe",
        "algmod.modrep",
        "algmod.sl2tilt",
    ],
    package_data={},
    include_package_data=True,
    tests_require=["pytest"],
    install_requires=["numpy", "natsort"],
    extras_require={"test": ["pytest"]},
    entry_points={"console_scripts": ["algmod=algmod.cli.cli:main"]},
    python_requires=">=3.7",
)
