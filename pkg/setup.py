from codecs import open
from os.path import abspath, dirname, join
from os import environ

from setuptools import find_packages, setup

this_dir = abspath(dirname(__file__))
with open(join(this_dir, "README.rst"), encoding="utf-8") as file:
    long_description = file.read()

with open(join(this_dir, "requirements.txt")) as f:
    requirements = [requirement for requirement in f.read().split("\n") if requirement]

version = environ.get("VERSION", "1.0.dev0")

setup(
    name="autowave",
    version=version,
    description="Boundary observability of the wave equation on triangles",
    long_description=long_description,
    long_description_content_type="text/x-rst",
    include_package_data=True,
    license="MIT License",
    classifiers=[
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Scientific/Engineering :: Physics",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
    ],
    keywords="cli",
    packages=find_packages(exclude=["docs", "test_autowave", "test_autowave*"]),
    package_data={"autowave": ["config/*.ini", "config/visualize/*.ini"]},
    entry_points={"console_scripts": ["autowave=autowave.cli.main:main"]},
    install_requires=requirements,
    setup_requires=["pytest-runner"],
    tests_require=["pytest"],
)
